"""Independent brute-force baselines used to cross-check the main algorithms.

These deliberately avoid the machinery they certify: the Jacobian oracle
does dense row reduction over plain Fractions on the full truncated path
basis, and the word-length oracle enumerates the whole Coxeter group by
matrix products. Slow and obvious beats fast and clever here.
"""

from __future__ import annotations

from fractions import Fraction

from .potential import cyclic_derivative


def _paths_up_to(quiver, n):
    """Lists of words per degree, 0..n; degree 0 holds the vertices."""
    by_deg = [sorted(quiver.vertices)]
    if n >= 1:
        by_deg.append([(a.id,) for a in sorted(quiver.arrows)])
    for d in range(2, n + 1):
        prev = by_deg[-1]
        cur = []
        for w in prev:
            top = quiver.arrow(w[0]).tgt
            for a in quiver.out_arrows(top):
                cur.append((a.id,) + w)
        cur.sort()
        by_deg.append(cur)
    return by_deg[:n + 1]


def brute_force_jacobian(qp, n, lam_value=None):
    """Per-degree quotient dimensions by dense elimination over Q.

    Builds one dense row per ideal element p * dW * q (total degree <= n),
    with columns indexed by all paths of degree 1..n ordered by (degree,
    word). Coefficients in Q(L) are specialized at lam_value. Returns
    (dims, stabilized_at, total): the same report contract as the main
    implementation, computed with none of its structure.
    """
    q = qp.quiver
    by_deg = _paths_up_to(q, n)
    col = {}
    order = []
    for d in range(1, n + 1):
        for w in by_deg[d]:
            col[w] = len(order)
            order.append((d, w))
    ncols = len(order)

    def coef_value(c):
        if lam_value is None:
            return c.as_fraction()
        return c.specialize(lam_value)

    derivs = []
    for a in q.arrows:
        ps = cyclic_derivative(qp.potential, a.id)
        if ps.lazy:
            raise ValueError("oracle expects a potential without loop cycles")
        if not ps.terms:
            continue
        terms = [(coef_value(c), w) for w, c in ps.terms.items()]
        mindeg = min(len(w) for _, w in terms)
        derivs.append((a, terms, mindeg))

    starts = {v: [] for v in q.vertices}   # paths grouped by source vertex
    ends = {v: [] for v in q.vertices}     # paths grouped by target vertex
    for v in q.vertices:
        starts[v].append(())
        ends[v].append(())
    for d in range(1, n + 1):
        for w in by_deg[d]:
            starts[q.arrow(w[-1]).src].append(w)
            ends[q.arrow(w[0]).tgt].append(w)

    rows = []
    for a, terms, mindeg in derivs:
        for p in starts[a.src]:
            for qq in ends[a.tgt]:
                if len(p) + len(qq) + mindeg > n:
                    continue
                row = [Fraction(0)] * ncols
                touched = False
                for c, w in terms:
                    full = p + w + qq
                    if len(full) <= n:
                        row[col[full]] += c
                        touched = True
                if touched:
                    rows.append(row)

    # dense Gaussian elimination, pivoting on the first nonzero column
    pivots = {}
    for row in rows:
        while True:
            lead = next((i for i, x in enumerate(row) if x != 0), None)
            if lead is None:
                break
            if lead in pivots:
                f = row[lead]
                prow = pivots[lead]
                for i in range(lead, ncols):
                    if prow[i]:
                        row[i] -= f * prow[i]
            else:
                inv = 1 / row[lead]
                for i in range(lead, ncols):
                    if row[i]:
                        row[i] *= inv
                pivots[lead] = row
                break

    killed = [0] * (n + 1)
    for lead in pivots:
        killed[order[lead][0]] += 1
    dims = [len(by_deg[d]) for d in range(n + 1)]
    dims = [dims[d] - killed[d] for d in range(n + 1)]

    stabilized_at = None
    for d in range(1, n):
        if dims[d] == 0:
            stabilized_at = d
            break
    total = sum(dims[:stabilized_at]) if stabilized_at is not None else None
    if stabilized_at is not None:
        for d in range(stabilized_at, n + 1):
            if dims[d] != 0:
                raise AssertionError("dimension profile rises after a zero degree")
    return dims, stabilized_at, total


def coxeter_group_table(gcm, max_elements=200000):
    """Every group element as a matrix of the reflection action, with its length.

    Breadth-first closure of {s_i} under right multiplication; the length
    of an element is its distance from the identity in the Cayley graph.
    Only usable for finite groups (raises when the budget is exceeded).
    """
    n = len(gcm)

    def reflect(vec, i):
        s = sum(gcm[i][j] * vec[j] for j in range(n))
        out = list(vec)
        out[i] -= s
        return tuple(out)

    def act(mat, i):
        return tuple(reflect(col, i) for col in mat)

    identity = tuple(tuple(1 if r == c else 0 for r in range(n)) for c in range(n))
    lengths = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                m2 = act(m, i)
                if m2 not in lengths:
                    lengths[m2] = lengths[m] + 1
                    nxt.append(m2)
                    if len(lengths) > max_elements:
                        raise ValueError("group too large for the oracle")
        frontier = nxt
    return lengths


def word_is_reduced_oracle(gcm, word, table=None):
    """Reduced iff the Cayley length of the product equals the word length."""
    if table is None:
        table = coxeter_group_table(gcm)
    n = len(gcm)

    def reflect(vec, i):
        s = sum(gcm[i][j] * vec[j] for j in range(n))
        out = list(vec)
        out[i] -= s
        return tuple(out)

    mat = tuple(tuple(1 if r == c else 0 for r in range(n)) for c in range(n))
    for i in word:
        mat = tuple(reflect(col, i) for col in mat)
    return table[mat] == len(word)
