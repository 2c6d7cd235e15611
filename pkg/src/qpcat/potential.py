"""Potentials in cyclic normal form, cyclic derivatives, substitutions.

Composition is right-to-left: in a word (a1, ..., am) the arrow am acts
first, so the word is a valid path when src(a_p) = tgt(a_{p+1}), it starts
at src(am) and ends at tgt(a1). A cycle additionally satisfies
src(am) = tgt(a1). Every cycle is stored in its lexicographically least
rotation, which makes cyclic equivalence a dictionary equality.

This convention is pinned by a derivative identity of the q2222 potential
(see constructions and the tests); the opposite convention fails it.
"""

from __future__ import annotations

import warnings
from typing import NamedTuple

from .scalars import RF_ONE, RatFunc, rf


class PotentialError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


def word_src(q, word):
    return q.arrow(word[-1]).src


def word_tgt(q, word):
    return q.arrow(word[0]).tgt


def validate_path(q, word):
    """Check composability of a nonempty word; names the failing position."""
    if not word:
        raise PotentialError("empty word is not a path")
    for p in range(len(word) - 1):
        a, b = q.arrow(word[p]), q.arrow(word[p + 1])
        if a.src != b.tgt:
            raise PotentialError(
                "word %r is not composable at position %d: src(%s)=%s but tgt(%s)=%s"
                % (list(word), p + 1, a.id, a.src, b.id, b.tgt))


def validate_cycle(q, word):
    validate_path(q, word)
    first, last = q.arrow(word[0]), q.arrow(word[-1])
    if last.src != first.tgt:
        raise PotentialError(
            "word %r is not cyclic: starts at %s, ends at %s"
            % (list(word), last.src, first.tgt))


def rotations(word):
    return [word[r:] + word[:r] for r in range(len(word))]


def canonical_rotation(word):
    return min(rotations(word))


class Potential:
    """Finite linear combination of cycles, keyed by canonical rotation.

    Construct through cyclic_normal_form (or Potential.build); the raw
    constructor trusts its input.
    """

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        self.terms = dict(terms or {})

    @staticmethod
    def build(quiver, raw_terms):
        return cyclic_normal_form(raw_terms, quiver)

    def is_zero(self):
        return not self.terms

    def arrows_used(self):
        used = set()
        for w in self.terms:
            used.update(w)
        return used

    def min_cycle_len(self):
        return min((len(w) for w in self.terms), default=0)

    def max_cycle_len(self):
        return max((len(w) for w in self.terms), default=0)

    def quadratic_terms(self):
        return {w: c for w, c in self.terms.items() if len(w) == 2}

    def scaled(self, c):
        c = rf(c)
        if c.is_zero():
            return Potential(self.quiver)
        return Potential(self.quiver, {w: coef * c for w, coef in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, None)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return Potential(self.quiver, out)

    def __eq__(self, other):
        return isinstance(other, Potential) and self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "Potential(0)"
        return "Potential(%s)" % ", ".join(
            "%s: %s" % ("*".join(w), c) for w, c in self.sorted_terms())


def cyclic_normal_form(raw_terms, quiver):
    """Canonical potential from (coefficient, word) pairs.

    Validates each word as a cycle, rotates to the least rotation, merges
    coefficients of equal rotations and drops zeros. Two inputs are
    cyclically equivalent exactly when their normal forms are equal.
    """
    terms = {}
    for coef, word in raw_terms:
        coef = rf(coef)
        word = tuple(word)
        validate_cycle(quiver, word)
        if coef.is_zero():
            continue
        key = canonical_rotation(word)
        s = terms.get(key)
        s = coef if s is None else s + coef
        if s.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = s
    return Potential(quiver, terms)


class PathSum:
    """Formal linear combination of (non-cyclic) paths, plus lazy paths.

    Lazy paths (length-zero paths at a vertex) only arise as cyclic
    derivatives of loop cycles; they are kept in a separate table keyed
    by vertex.
    """

    def __init__(self, quiver, terms=None, lazy=None):
        self.quiver = quiver
        self.terms = dict(terms or {})
        self.lazy = dict(lazy or {})

    def add_term(self, coef, word):
        word = tuple(word)
        s = self.terms.get(word)
        s = coef if s is None else s + coef
        if s.is_zero():
            self.terms.pop(word, None)
        else:
            self.terms[word] = s

    def add_lazy(self, coef, vertex):
        s = self.lazy.get(vertex)
        s = coef if s is None else s + coef
        if s.is_zero():
            self.lazy.pop(vertex, None)
        else:
            self.lazy[vertex] = s

    def is_zero(self):
        return not self.terms and not self.lazy

    def min_len(self):
        if self.lazy:
            return 0
        return min((len(w) for w in self.terms), default=0)

    def scaled(self, c):
        c = rf(c)
        if c.is_zero():
            return PathSum(self.quiver)
        return PathSum(self.quiver,
                       {w: coef * c for w, coef in self.terms.items()},
                       {v: coef * c for v, coef in self.lazy.items()})

    def __add__(self, other):
        out = PathSum(self.quiver, self.terms, self.lazy)
        for w, c in other.terms.items():
            out.add_term(c, w)
        for v, c in other.lazy.items():
            out.add_lazy(c, v)
        return out

    def __sub__(self, other):
        return self + other.scaled(rf(-1))

    def __eq__(self, other):
        return (isinstance(other, PathSum) and self.terms == other.terms
                and self.lazy == other.lazy)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        bits = ["%s: %s" % ("*".join(w), c) for w, c in self.sorted_terms()]
        bits += ["e_%s: %s" % (v, c) for v, c in sorted(self.lazy.items())]
        return "PathSum(%s)" % (", ".join(bits) or "0")


def cyclic_derivative(pot, arrow_id):
    """Sum over occurrences of the arrow of the rotated remainder words.

    For a cycle (a1 ... am) and each position p with a_p equal to the given
    arrow, contributes (a_{p+1} ... am a_1 ... a_{p-1}); all resulting paths
    run tgt(arrow) -> src(arrow). A length-one cycle (a loop) contributes
    the lazy path at its vertex.
    """
    a = pot.quiver.arrow(arrow_id)
    out = PathSum(pot.quiver)
    for word, coef in pot.terms.items():
        m = len(word)
        for p in range(m):
            if word[p] != a.id:
                continue
            if m == 1:
                out.add_lazy(coef, a.src)
            else:
                out.add_term(coef, word[p + 1:] + word[:p])
    return out


def _rank(matrix):
    """Rank of a small matrix over the scalar field."""
    rows = [list(r) for r in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = RF_ONE / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


class Substitution:
    """Vertex-fixing algebra endomorphism given on arrows, with a truncation.

    Maps each arrow to a formal combination of parallel paths. The linear
    part (single-arrow terms) must be an invertible change of arrows;
    arrows missing from the table are understood as fixed.
    """

    def __init__(self, quiver, images, truncation=16):
        self.quiver = quiver
        self.truncation = truncation
        self.images = {}
        for arrow_id, combo in images.items():
            a = quiver.arrow(arrow_id)
            cleaned = []
            for coef, word in combo:
                coef = rf(coef)
                word = tuple(word)
                if coef.is_zero():
                    continue
                if not word:
                    raise SubstitutionError(
                        "image of %s contains a length-zero path" % arrow_id)
                validate_path(quiver, word)
                if word_src(quiver, word) != a.src or word_tgt(quiver, word) != a.tgt:
                    raise SubstitutionError(
                        "image path %r of %s runs %s->%s, expected %s->%s"
                        % (list(word), arrow_id, word_src(quiver, word),
                           word_tgt(quiver, word), a.src, a.tgt))
                cleaned.append((coef, word))
            self.images[arrow_id] = cleaned

    @staticmethod
    def identity(quiver, truncation=16):
        return Substitution(quiver, {}, truncation)

    def image_of(self, arrow_id):
        if arrow_id in self.images:
            return self.images[arrow_id]
        self.quiver.arrow(arrow_id)
        return [(RF_ONE, (arrow_id,))]

    def linear_part_invertible(self):
        """Check per endpoint pair that the degree-one coefficient matrix is invertible."""
        by_pair = {}
        for a in self.quiver.arrows:
            by_pair.setdefault((a.src, a.tgt), []).append(a.id)
        for pair, ids in by_pair.items():
            ids = sorted(ids)
            pos = {x: i for i, x in enumerate(ids)}
            mat = []
            for x in ids:
                row = [rf(0)] * len(ids)
                for coef, word in self.image_of(x):
                    if len(word) == 1:
                        row[pos[word[0]]] = coef
                mat.append(row)
            if _rank(mat) != len(ids):
                return False
        return True

    def require_invertible(self):
        if not self.linear_part_invertible():
            raise SubstitutionError("linear part of the substitution is not invertible")

    def _expand_word(self, word, out, coef=RF_ONE, overflow=None):
        """All substituted expansions of a word, pruned at the truncation degree.

        Pruned branches are recorded in the optional one-element overflow
        sink, so callers can tell an exact result from a truncated one.
        """
        stack = [(0, coef, ())]
        n = len(word)
        while stack:
            pos, c, acc = stack.pop()
            if pos == n:
                out.append((c, acc))
                continue
            remaining = n - pos - 1
            for ic, iw in self.image_of(word[pos]):
                total = len(acc) + len(iw) + remaining
                if total > self.truncation:
                    if overflow is not None:
                        overflow[0] = True
                    continue
                stack.append((pos + 1, c * ic, acc + iw))

    def apply_to_potential(self, pot, check=True, overflow=None):
        """Substitute into every cycle, expand, truncate and renormalize.

        A missing image means the arrow is fixed; an explicitly
        non-invertible linear part is rejected when check is on.
        """
        if check:
            for arrow_id in pot.arrows_used():
                self.image_of(arrow_id)
            self.require_invertible()
        raw = []
        for word, coef in pot.terms.items():
            self._expand_word(word, raw, coef, overflow)
        return cyclic_normal_form(raw, self.quiver)

    def apply_to_path_sum(self, ps):
        out = PathSum(ps.quiver, lazy=ps.lazy)
        for word, coef in ps.terms.items():
            raw = []
            self._expand_word(word, raw, coef)
            for c, w in raw:
                out.add_term(c, w)
        return out

    def then(self, second):
        """Substitution equal to applying self first, then second."""
        images = {}
        all_ids = set(self.images) | set(second.images)
        for arrow_id in all_ids:
            raw = []
            for coef, word in self.image_of(arrow_id):
                second._expand_word(word, raw, coef)
            merged = {}
            for c, w in raw:
                s = merged.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    merged.pop(w, None)
                else:
                    merged[w] = s
            images[arrow_id] = [(c, w) for w, c in sorted(merged.items())]
        return Substitution(self.quiver, images,
                            min(self.truncation, second.truncation))


def apply_substitution(phi, w):
    """Functional form of Substitution.apply_to_potential."""
    return phi.apply_to_potential(w)


class QP(NamedTuple):
    """A quiver together with a potential living on it."""
    quiver: object
    potential: Potential

    def is_proper(self):
        """Potential lies in the square of the arrow ideal (cycles of length >= 2)."""
        return self.potential.is_zero() or self.potential.min_cycle_len() >= 2

    def two_acyclic(self):
        return self.quiver.is_two_acyclic()

    def restricted(self, keep):
        return restrict_qp(self, keep)


def make_qp(quiver, raw_terms=()):
    qp = QP(quiver, cyclic_normal_form(raw_terms, quiver))
    if not qp.is_proper():
        raise PotentialError("potential has a cycle of length < 2")
    return qp


def restrict_qp(qp, keep):
    """Restriction to a vertex subset: keep arrows and cycles staying inside it.

    An empty subset is allowed and yields the empty QP, with a warning since
    it is almost always a caller mistake.
    """
    keep = {str(v) for v in keep}
    unknown = keep - set(qp.quiver.vertices)
    if unknown:
        raise PotentialError("unknown vertices in restriction: %s" % sorted(unknown))
    if not keep:
        warnings.warn("restricting to the empty vertex set", stacklevel=2)
    from .quiver import Quiver
    vertices = [v for v in qp.quiver.vertices if v in keep]
    arrows = [a for a in qp.quiver.arrows if a.src in keep and a.tgt in keep]
    sub = Quiver(vertices, arrows)
    ids = {a.id for a in arrows}
    terms = {w: c for w, c in qp.potential.terms.items() if all(x in ids for x in w)}
    return QP(sub, Potential(sub, terms))
