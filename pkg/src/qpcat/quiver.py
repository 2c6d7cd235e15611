"""Finite quivers with named arrows: validation, mutation, isomorphism, search.

A quiver is a finite directed multigraph whose arrows carry distinct string
ids. Arrow identity matters downstream (potentials reference arrows by id),
so mutation synthesizes new ids deterministically: the composite of
beta: i -> k with alpha: k -> j is "[alpha beta]", and reversal appends a
trailing "*" (stripping one if already present, so double reversal restores
the original id).
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import NamedTuple


class QuiverError(ValueError):
    pass


class Arrow(NamedTuple):
    id: str
    src: str
    tgt: str


class Quiver:
    """Immutable directed multigraph with identified arrows.

    Vertices are opaque strings kept in a fixed order; that order fixes the
    indexing of exchange matrices and the determinism of searches.
    """

    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex ids")
        vs = set(self.vertices)
        arrs = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(str(a[0]), str(a[1]), str(a[2]))
            if a.src not in vs or a.tgt not in vs:
                raise QuiverError("arrow %s has undeclared endpoint (%s -> %s)"
                                  % (a.id, a.src, a.tgt))
            arrs.append(a)
        self.arrows = tuple(arrs)
        self._by_id = {}
        for a in self.arrows:
            if a.id in self._by_id:
                raise QuiverError("duplicate arrow id %r" % a.id)
            self._by_id[a.id] = a
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._out[a.src].append(a)
            self._in[a.tgt].append(a)

    def arrow(self, arrow_id):
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise QuiverError("unknown arrow id %r" % arrow_id) from None

    def has_arrow(self, arrow_id):
        return arrow_id in self._by_id

    def out_arrows(self, v):
        return tuple(self._out[v])

    def in_arrows(self, v):
        return tuple(self._in[v])

    def multiplicity(self, i, j):
        return sum(1 for a in self._out[i] if a.tgt == j)

    def loops(self):
        return [a for a in self.arrows if a.src == a.tgt]

    def two_cycle_pairs(self):
        """All unordered pairs (a, b) of mutually inverse arrows."""
        pairs = []
        for a, b in itertools.combinations(self.arrows, 2):
            if a.src == b.tgt and a.tgt == b.src and a.src != a.tgt:
                pairs.append((a, b) if a.id <= b.id else (b, a))
        pairs.sort(key=lambda p: (p[0].id, p[1].id))
        return pairs

    def two_acyclic_violation(self):
        """Diagnostic naming a loop or a 2-cycle, or None if 2-acyclic."""
        for a in self.arrows:
            if a.src == a.tgt:
                return "loop %s at vertex %s" % (a.id, a.src)
        for a, b in self.two_cycle_pairs():
            return "2-cycle between arrows %s and %s (vertices %s, %s)" % (
                a.id, b.id, a.src, a.tgt)
        return None

    def is_two_acyclic(self):
        return self.two_acyclic_violation() is None

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and sorted(self.arrows) == sorted(other.arrows))

    def __repr__(self):
        return "Quiver(%d vertices, %d arrows)" % (len(self.vertices), len(self.arrows))


def reverse_id(arrow_id):
    return arrow_id[:-1] if arrow_id.endswith("*") else arrow_id + "*"


def composite_id(alpha_id, beta_id):
    return "[%s %s]" % (alpha_id, beta_id)


def is_acyclic(q):
    """True iff the quiver has no directed cycle (Kahn's algorithm)."""
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.tgt] += 1
    ready = deque(v for v in q.vertices if indeg[v] == 0)
    seen = 0
    while ready:
        v = ready.popleft()
        seen += 1
        for a in q.out_arrows(v):
            indeg[a.tgt] -= 1
            if indeg[a.tgt] == 0:
                ready.append(a.tgt)
    return seen == len(q.vertices)


def mutate_quiver(q, k):
    """Quiver mutation at vertex k by the three-step rule.

    Adds the composite [alpha beta]: i -> j for every path
    i -(beta)-> k -(alpha)-> j, reverses all arrows at k, then removes a
    maximal set of pairwise disjoint 2-cycles (pairs cancelled in
    lexicographic arrow-id order, which makes the output byte-stable).
    """
    k = str(k)
    if k not in q._out:
        raise QuiverError("vertex %r is not in the quiver" % k)
    bad = q.two_acyclic_violation()
    if bad is not None:
        raise QuiverError("mutation requires a 2-acyclic quiver: " + bad)

    incoming = sorted(q.in_arrows(k), key=lambda a: a.id)
    outgoing = sorted(q.out_arrows(k), key=lambda a: a.id)
    kept = [a for a in q.arrows if a.src != k and a.tgt != k]
    composites = [Arrow(composite_id(al.id, be.id), be.src, al.tgt)
                  for be in incoming for al in outgoing]
    reversed_ = [Arrow(reverse_id(a.id), a.tgt, a.src)
                 for a in q.arrows if a.src == k or a.tgt == k]

    candidate = Quiver(q.vertices, kept + composites + reversed_)
    cancelled = set()
    for a, b in candidate.two_cycle_pairs():
        if a.id not in cancelled and b.id not in cancelled:
            cancelled.add(a.id)
            cancelled.add(b.id)
    result = Quiver(q.vertices, [a for a in candidate.arrows if a.id not in cancelled])
    bad = result.two_acyclic_violation()
    if bad is not None:  # cannot happen for 2-acyclic input; guards the cancellation step
        raise QuiverError("mutation produced a non-2-acyclic quiver: " + bad)
    return result


def mutate_sequence(q, ks):
    for k in ks:
        q = mutate_quiver(q, k)
    return q


def to_exchange_matrix(q):
    """b[i][j] = #arrows i->j minus #arrows j->i, indexed by vertex order."""
    n = len(q.vertices)
    idx = {v: i for i, v in enumerate(q.vertices)}
    b = [[0] * n for _ in range(n)]
    for a in q.arrows:
        i, j = idx[a.src], idx[a.tgt]
        b[i][j] += 1
        b[j][i] -= 1
    return b


def from_exchange_matrix(b, vertices=None):
    """Quiver with b[i][j] arrows i->j for positive entries; ids "i.j.n"."""
    n = len(b)
    for row in b:
        if len(row) != n:
            raise QuiverError("exchange matrix must be square")
    for i in range(n):
        for j in range(n):
            if b[i][j] != -b[j][i]:
                raise QuiverError("exchange matrix must be skew-symmetric "
                                  "(entry %d,%d)" % (i, j))
    if vertices is None:
        vertices = [str(i + 1) for i in range(n)]
    vertices = [str(v) for v in vertices]
    arrows = []
    for i in range(n):
        for j in range(n):
            for m in range(max(b[i][j], 0)):
                arrows.append(Arrow("%s.%s.%d" % (vertices[i], vertices[j], m + 1),
                                    vertices[i], vertices[j]))
    return Quiver(vertices, arrows)


def mutate_exchange_matrix(b, k):
    """Standard matrix mutation at index k (the matrix shadow of mutate_quiver)."""
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
    return out


def _refined_colors(q, rounds=3):
    """Iterated neighbourhood refinement; a cheap isomorphism invariant.

    Colors are nested tuples built only from degrees, so they compare
    equal across different quivers exactly when the local structure does.
    """
    color = {v: (len(q.out_arrows(v)), len(q.in_arrows(v))) for v in q.vertices}
    for _ in range(rounds):
        color = {v: (color[v],
                     tuple(sorted(color[a.tgt] for a in q.out_arrows(v))),
                     tuple(sorted(color[a.src] for a in q.in_arrows(v))))
                 for v in q.vertices}
    return color


def quiver_isomorphic(q1, q2, max_vertices=64):
    """Vertex bijection preserving arrow multiplicities, or None.

    Deterministic: vertices of q1 are matched in their declared order against
    candidates taken in q2's declared order, so the first certificate found
    is the lexicographically least one.
    """
    if len(q1.vertices) > max_vertices or len(q2.vertices) > max_vertices:
        raise QuiverError("isomorphism search capped at %d vertices" % max_vertices)
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    c1 = _refined_colors(q1)
    c2 = _refined_colors(q2)
    if sorted(c1.values()) != sorted(c2.values()):
        return None
    cands = {v: [w for w in q2.vertices if c2[w] == c1[v]] for v in q1.vertices}

    order = list(q1.vertices)
    mapping = {}
    used = set()

    def consistent(v, w):
        for u, x in mapping.items():
            if q1.multiplicity(v, u) != q2.multiplicity(w, x):
                return False
            if q1.multiplicity(u, v) != q2.multiplicity(x, w):
                return False
        return q1.multiplicity(v, v) == q2.multiplicity(w, w)

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in cands[v]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def transport_arrows(q1, q2, vertex_map):
    """Arrow bijection induced by a vertex bijection.

    Only defined when every arrow class (src, tgt) has multiplicity one in
    q1; raises otherwise, since the induced map would be ambiguous.
    """
    lookup = {}
    for a in q2.arrows:
        lookup.setdefault((a.src, a.tgt), []).append(a)
    out = {}
    for a in q1.arrows:
        if q1.multiplicity(a.src, a.tgt) != 1:
            raise QuiverError("parallel arrows %s->%s make the transport ambiguous"
                              % (a.src, a.tgt))
        images = lookup.get((vertex_map[a.src], vertex_map[a.tgt]), [])
        if len(images) != 1:
            raise QuiverError("vertex map does not induce an arrow bijection at %s" % a.id)
        out[a.id] = images[0].id
    return out


def canonical_form(q):
    """Hashable canonical key for a 2-acyclic quiver, up to isomorphism.

    Minimizes the flattened exchange matrix over vertex orderings that are
    monotone with respect to the refinement colors (a color-respecting
    ordering always contains the minimum of its orbit, and colors are
    isomorphism-invariant, so equal keys mean isomorphic quivers).
    """
    colors = _refined_colors(q)
    groups = {}
    for v in q.vertices:
        groups.setdefault(colors[v], []).append(v)
    classes = [sorted(groups[c]) for c in sorted(groups)]
    idx = {v: i for i, v in enumerate(q.vertices)}
    b = to_exchange_matrix(q)

    best = None
    for perm_parts in itertools.product(*[itertools.permutations(c) for c in classes]):
        ordering = [v for part in perm_parts for v in part]
        flat = tuple(b[idx[u]][idx[w]] for u in ordering for w in ordering)
        if best is None or flat < best:
            best = flat
    return (len(q.vertices), best)


class MutationClassReport(NamedTuple):
    class_size: int
    complete: bool
    acyclic_found: bool
    acyclic_witness: tuple | None
    nodes_expanded: int
    hint_accepted: bool | None


def mutation_class_bfs(q, max_nodes=500, max_depth=20, hint=None):
    """Breadth-first closure of q under mutation, deduplicated by canonical form.

    Returns the set of canonical forms seen plus a search report saying
    whether an acyclic member was found (with a witness mutation sequence).
    A supplied hint sequence is verified directly before the search.
    """
    bad = q.two_acyclic_violation()
    if bad is not None:
        raise QuiverError("mutation class search requires a 2-acyclic start: " + bad)

    hint_accepted = None
    if hint is not None:
        hint_accepted = is_acyclic(mutate_sequence(q, hint))

    start_key = canonical_form(q)
    seen = {start_key}
    witness = () if is_acyclic(q) else None
    queue = deque([(q, (), 0)])
    expanded = 0
    complete = True
    while queue:
        cur, path, depth = queue.popleft()
        if depth >= max_depth:
            complete = False
            continue
        expanded += 1
        for k in cur.vertices:
            nxt = mutate_quiver(cur, k)
            key = canonical_form(nxt)
            if key in seen:
                continue
            if len(seen) >= max_nodes:
                complete = False
                continue
            seen.add(key)
            npath = path + (k,)
            if witness is None and is_acyclic(nxt):
                witness = npath
            queue.append((nxt, npath, depth + 1))

    if witness is None and hint_accepted:
        witness = tuple(hint)
    report = MutationClassReport(
        class_size=len(seen), complete=complete,
        acyclic_found=witness is not None, acyclic_witness=witness,
        nodes_expanded=expanded, hint_accepted=hint_accepted)
    return seen, report
