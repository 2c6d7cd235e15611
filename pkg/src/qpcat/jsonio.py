"""JSON schemas and the text grammar for scalars and potentials.

Schemas (the contract between the library, the CLI and the HTTP service):

  quiver        {"vertices": ["1", "2"], "arrows": [{"id": "a", "src": "1", "tgt": "2"}]}
  matrix        nested integer arrays, skew-symmetric
  potential     {"cycles": [{"coef": "2/3", "word": ["a", "b", "c"]}]}
  qp            {"quiver": ..., "potential": ...}
  presentation  {"quiver": ..., "relations": [{"name": "r1",
                    "terms": [{"coef": "-L", "path": ["a", "b"]}]}]}
  word          {"letters": ["o", "b1", ...]}
  jacobian      {"dims": [...], "stabilized_at": d | null, "total": D | null}
  trace         {"sequence": [...], "two_acyclic": true, "truncation": 16}

Scalars are strings over the grammar: integers, the letter L, + - * / ^
and parentheses. Potential text: term := [scalar "*"] arrow ("*" arrow)+,
potential := term (("+" | "-") term)*.
"""

from __future__ import annotations

from fractions import Fraction

from .constructions import AlgebraPresentation, make_presentation
from .potential import PathSum, Potential, QP, cyclic_normal_form
from .quiver import Arrow, Quiver
from .scalars import P_LAM, P_ONE, Poly, RatFunc, format_scalar, rf


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------- scalars

def _tokenize_scalar(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch == "L":
            toks.append(("lam", None))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, None))
            i += 1
        else:
            raise ParseError("unexpected character %r in scalar %r" % (ch, text))
    return toks


class _ScalarParser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        if self.pos >= len(self.toks):
            raise ParseError("unexpected end of scalar expression")
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[0]))
        self.pos += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value - rhs if op == "-" else value + rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            value = value / rhs if op == "/" else value * rhs
        return value

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        value = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            n = self.take("int")[1]
            value = value ** (-n if neg else n)
        return value

    def atom(self):
        kind, payload = self.take()
        if kind == "int":
            return rf(payload)
        if kind == "lam":
            return RatFunc(P_LAM)
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError("unexpected token %r in scalar" % kind)


def parse_scalar(text):
    """Parse the scalar grammar (rationals and rational functions in L)."""
    parser = _ScalarParser(_tokenize_scalar(str(text)))
    value = parser.expr()
    if parser.pos != len(parser.toks):
        raise ParseError("trailing input in scalar %r" % text)
    return value


def scalar_to_str(s):
    return format_scalar(rf(s))


# ---------------------------------------------------------------- quivers

def quiver_to_json(q):
    return {"vertices": list(q.vertices),
            "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in q.arrows]}


def quiver_from_json(data):
    try:
        vertices = data["vertices"]
        arrows = [Arrow(str(a["id"]), str(a["src"]), str(a["tgt"]))
                  for a in data["arrows"]]
    except (KeyError, TypeError) as exc:
        raise ParseError("malformed quiver JSON: %s" % exc) from None
    return Quiver(vertices, arrows)


def matrix_to_json(b):
    return [list(row) for row in b]


def matrix_from_json(data):
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise ParseError("exchange matrix must be a nested integer array")
    return [[int(x) for x in row] for row in data]


# -------------------------------------------------------------- potentials

def potential_to_json(pot):
    return {"cycles": [{"coef": scalar_to_str(c), "word": list(w)}
                       for w, c in pot.sorted_terms()]}


def potential_from_json(data, quiver):
    try:
        raw = [(parse_scalar(c["coef"]), tuple(c["word"])) for c in data["cycles"]]
    except (KeyError, TypeError) as exc:
        raise ParseError("malformed potential JSON: %s" % exc) from None
    return cyclic_normal_form(raw, quiver)


def qp_to_json(qp):
    return {"quiver": quiver_to_json(qp.quiver),
            "potential": potential_to_json(qp.potential)}


def qp_from_json(data):
    q = quiver_from_json(data["quiver"])
    return QP(q, potential_from_json(data.get("potential", {"cycles": []}), q))


def _split_top_level(text, separators):
    """Split on separators not nested inside parentheses or brackets."""
    parts = []
    ops = []
    depth = 0
    cur = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in separators:
            parts.append("".join(cur))
            ops.append(ch)
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts, ops


def parse_potential(text, quiver):
    """Parse the potential text grammar against a quiver.

    A term is an optional scalar factor followed by at least two arrow ids,
    all joined by "*"; pieces that name arrows of the quiver are arrows,
    everything else must parse as a scalar and precede the arrows.
    """
    text = text.strip()
    if not text or text == "0":
        return cyclic_normal_form([], quiver)
    chunks, ops = _split_top_level(text, "+-")
    raw = []
    signs = [1]
    for op in ops:
        signs.append(-1 if op == "-" else 1)
    for index, (sign, chunk) in enumerate(zip(signs, chunks)):
        chunk = chunk.strip()
        if not chunk:
            if index == 0:  # leading sign; it already went into signs[1]
                continue
            raise ParseError("empty term in potential %r" % text)
        pieces, _ = _split_top_level(chunk, "*")
        pieces = [p.strip() for p in pieces]
        coef = rf(sign)
        word = []
        for piece in pieces:
            if quiver.has_arrow(piece):
                word.append(piece)
            elif word:
                raise ParseError("scalar piece %r after arrows in term %r" % (piece, chunk))
            else:
                coef = coef * parse_scalar(piece)
        if len(word) < 2:
            raise ParseError("term %r needs at least two arrows" % chunk)
        raw.append((coef, tuple(word)))
    return cyclic_normal_form(raw, quiver)


def _is_simple_coef(cs):
    if cs == "L":
        return True
    body = cs.split("/")
    return all(part.isdigit() for part in body) and 1 <= len(body) <= 2


def potential_to_text(pot):
    if pot.is_zero():
        return "0"
    bits = []
    for w, c in pot.sorted_terms():
        cs = scalar_to_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:].strip()
        if cs == "1":
            body = "*".join(w)
        else:
            coef = cs if _is_simple_coef(cs) else "(%s)" % cs
            body = "%s*%s" % (coef, "*".join(w))
        if not bits:
            bits.append(("-" if neg else "") + body)
        else:
            bits.append(("- " if neg else "+ ") + body)
    return " ".join(bits)


# ------------------------------------------------------------ presentations

def presentation_to_json(pres):
    rels = []
    for name, ps in pres.relations:
        rels.append({"name": name,
                     "terms": [{"coef": scalar_to_str(c), "path": list(w)}
                               for w, c in ps.sorted_terms()]})
    return {"quiver": quiver_to_json(pres.quiver), "relations": rels}


def presentation_from_json(data):
    q = quiver_from_json(data["quiver"])
    rels = []
    for rel in data.get("relations", []):
        try:
            name = str(rel["name"])
            ps = PathSum(q)
            for t in rel["terms"]:
                ps.add_term(parse_scalar(t["coef"]), tuple(t["path"]))
        except (KeyError, TypeError) as exc:
            raise ParseError("malformed relation JSON: %s" % exc) from None
        rels.append((name, ps))
    return make_presentation(q, rels)


# ------------------------------------------------------------------- words

def word_to_json(word):
    return {"letters": [str(w) for w in word]}


def word_from_json(data):
    try:
        return tuple(str(x) for x in data["letters"])
    except (KeyError, TypeError) as exc:
        raise ParseError("malformed word JSON: %s" % exc) from None
