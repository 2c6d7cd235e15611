"""Coxeter groups of acyclic quivers, reduced words, and the word quiver.

The generalized Cartan matrix of an acyclic quiver has 2 on the diagonal
and -d_ij off it, where d_ij counts edges between i and j in the
underlying graph. Reducedness is decided by the root test: a word
s_{i1} ... s_{il} is reduced iff each partial image
s_{i1} ... s_{i(k-1)} (alpha_{ik}) is a positive root vector under the
reflection action v -> v - (sum_j A[i][j] v_j) e_i. Integer coordinates
throughout; Python integers never overflow.
"""

from __future__ import annotations

from typing import NamedTuple

from .quiver import Arrow, Quiver


class CoxeterError(ValueError):
    pass


class GCM(NamedTuple):
    letters: tuple          # vertex names, fixing the index order
    matrix: tuple           # tuple of tuple of ints

    def index(self, letter):
        try:
            return self.letters.index(letter)
        except ValueError:
            raise CoxeterError("unknown generator %r" % letter) from None


def gcm_from_quiver(q):
    """Generalized Cartan matrix of the underlying graph of an acyclic quiver."""
    from .quiver import is_acyclic
    if not is_acyclic(q):
        raise CoxeterError("the Coxeter group construction needs an acyclic quiver")
    letters = q.vertices
    n = len(letters)
    mat = [[2 if r == c else 0 for c in range(n)] for r in range(n)]
    idx = {v: i for i, v in enumerate(letters)}
    for a in q.arrows:
        i, j = idx[a.src], idx[a.tgt]
        mat[i][j] -= 1
        mat[j][i] -= 1
    return GCM(letters, tuple(tuple(r) for r in mat))


def _reflect(gcm, vec, i):
    s = sum(gcm.matrix[i][j] * vec[j] for j in range(len(vec)))
    out = list(vec)
    out[i] -= s
    return out


class ReducedReport(NamedTuple):
    reduced: bool
    failing_prefix: int | None   # least k with a non-positive partial root


def is_reduced(gcm, word):
    """Root test for reducedness; on failure reports the least failing prefix."""
    n = len(gcm.letters)
    indices = [w if isinstance(w, int) else gcm.index(w) for w in word]
    for i in indices:
        if not 0 <= i < n:
            raise CoxeterError("generator index %r out of range" % i)
    for k in range(1, len(indices) + 1):
        vec = [0] * n
        vec[indices[k - 1]] = 1
        for pos in range(k - 2, -1, -1):
            vec = _reflect(gcm, vec, indices[pos])
        if any(x < 0 for x in vec):
            return ReducedReport(False, k)
    return ReducedReport(True, None)


def partial_roots(gcm, word):
    """The partial root vectors of the root test, in prefix order."""
    n = len(gcm.letters)
    indices = [w if isinstance(w, int) else gcm.index(w) for w in word]
    out = []
    for k in range(1, len(indices) + 1):
        vec = [0] * n
        vec[indices[k - 1]] = 1
        for pos in range(k - 2, -1, -1):
            vec = _reflect(gcm, vec, indices[pos])
        out.append(tuple(vec))
    return out


def qw_tilde(q, word):
    """Quiver on the positions of a reduced word.

    Rule A: consecutive occurrences of the same letter give an arrow from
    the later position to the earlier. Rule B: for each underlying edge
    {i, j} with multiplicity d, take the subsequence of letters in {i, j},
    group it into maximal blocks of equal letters, and draw d arrows from
    the last position of each block to the last position of the following
    block.
    """
    gcm = gcm_from_quiver(q)
    rep = is_reduced(gcm, word)
    if not rep.reduced:
        raise CoxeterError("word is not reduced (fails at prefix %d)" % rep.failing_prefix)
    letters = [str(w) for w in word]
    for x in letters:
        if x not in set(q.vertices):
            raise CoxeterError("letter %r is not a vertex of the quiver" % x)
    l = len(letters)
    positions = [str(p) for p in range(1, l + 1)]
    arrows = []

    last_seen = {}
    for p, x in enumerate(letters):
        if x in last_seen:
            arrows.append(Arrow("A%d_%d" % (p + 1, last_seen[x] + 1),
                                positions[p], positions[last_seen[x]]))
        last_seen[x] = p

    idx = {v: i for i, v in enumerate(q.vertices)}
    edges = {}
    for a in q.arrows:
        key = tuple(sorted((a.src, a.tgt), key=lambda v: idx[v]))
        edges[key] = edges.get(key, 0) + 1
    for (i, j), d in sorted(edges.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]])):
        sub = [p for p, x in enumerate(letters) if x in (i, j)]
        blocks = []
        for p in sub:
            if blocks and letters[blocks[-1][-1]] == letters[p]:
                blocks[-1].append(p)
            else:
                blocks.append([p])
        for b1, b2 in zip(blocks, blocks[1:]):
            src, tgt = b1[-1], b2[-1]
            for m in range(d):
                name = "B%d_%d" % (src + 1, tgt + 1)
                if d > 1:
                    name += "_%d" % (m + 1)
                arrows.append(Arrow(name, positions[src], positions[tgt]))

    return Quiver(positions, arrows)


def qw(q, word):
    """qw_tilde with the last occurrence of every letter removed."""
    full = qw_tilde(q, word)
    letters = [str(w) for w in word]
    drop = set()
    last_seen = {}
    for p, x in enumerate(letters):
        last_seen[x] = p
    drop = {str(p + 1) for p in last_seen.values()}
    keep = [v for v in full.vertices if v not in drop]
    arrows = [a for a in full.arrows if a.src not in drop and a.tgt not in drop]
    return Quiver(keep, arrows)


class StarWord(NamedTuple):
    quiver: Quiver          # the star-shaped acyclic quiver
    word: tuple             # the reduced word over its vertices


def _star_quiver(p1, p2, p3):
    """Star with center o and arms a, b, c; the a-arm flips for weight two."""
    vertices = ["o"]
    arrows = []
    arms = {"a": p1 - 2, "b": p2 - 2, "c": p3 - 2}
    if p1 == 2:
        vertices.append("a1")
        arrows.append(Arrow("a1.o", "a1", "o"))
        arms["a"] = 0
    for arm in ("a", "b", "c"):
        n = arms[arm]
        if arm == "a" and p1 == 2:
            continue
        prev = "o"
        for t in range(1, n + 1):
            v = "%s%d" % (arm, t)
            vertices.append(v)
            arrows.append(Arrow("%s.%s" % (prev, v), prev, v))
            prev = v
    return Quiver(vertices, arrows)


def birs_word(p1, p2, p3):
    """The star quiver and reduced word whose word quiver is the tilting star.

    Two templates, split on whether the smallest weight is two; weights
    must satisfy 2 <= p1 <= p2 <= p3 with at most one weight equal to two
    (two or more weights of two fall into the cases handled by plain
    acyclic quivers, where no word family is prescribed).
    """
    p1, p2, p3 = int(p1), int(p2), int(p3)
    if not (2 <= p1 <= p2 <= p3):
        raise CoxeterError("weights must satisfy 2 <= p1 <= p2 <= p3")
    if p2 == 2:
        raise CoxeterError("at most one weight may equal two for the word families")

    quiver = _star_quiver(p1, p2, p3)
    a_run = ["a%d" % t for t in range(1, p1 - 1)]
    b_run = ["b%d" % t for t in range(1, p2 - 1)]
    c_run = ["c%d" % t for t in range(1, p3 - 1)]
    if p1 == 2:
        head = ["o", "b1", "c1", "a1"]
        block = ["o"] + b_run + c_run + ["a1"]
        tail = ["o"] + b_run + c_run
        word = head + block + tail
    else:
        head = ["o", "a1", "b1", "c1"]
        block = ["o"] + a_run + b_run + c_run
        word = head + block + block
    return StarWord(quiver, tuple(word))
