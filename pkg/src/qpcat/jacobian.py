"""Truncated Jacobian-algebra computation.

The quotient of the complete path algebra by the closed ideal generated by
the cyclic derivatives is computed degree by degree: spanning elements
p * dW * q are row-reduced with columns ordered by (degree, word), so the
pivot of each reduced row sits at the lowest-degree component of an ideal
element. The count of pivots in degree d is then the dimension of the
degree-d piece of the associated graded ideal, which is exact for every
d <= N once all generators of minimal degree <= d have entered.

Finiteness certificate: if every degree-d path is the lowest-degree part
of an ideal element, then m^d lies in J(W) + m^(d+1); since J(W) is closed
and m-stable this forces m^d into J(W), and all higher degrees vanish too.
The certificate is sound, never guessed: when no such d <= N-1 exists the
dimension is reported as undetermined.
"""

from __future__ import annotations

from typing import NamedTuple

from .potential import canonical_rotation, cyclic_derivative
from .scalars import RF_ONE


class TruncatedQuotient(NamedTuple):
    qp: object
    degree_bound: int
    dims: tuple                  # quotient dimension per degree 0..N
    stabilized_at: int | None
    total: int | None
    basis_by_degree: tuple       # surviving path classes per computed degree
    leading_by_degree: tuple     # reduction data: pivot paths (graded ideal basis)
    pair_dims: dict | None       # (src, tgt) -> total dimension, when finite


def _paths_by_degree(quiver, n):
    out = [[(v,) for v in quiver.vertices]]  # degree 0 sentinel: one entry per vertex
    if n >= 1:
        out.append(sorted((a.id,) for a in quiver.arrows))
    for d in range(2, n + 1):
        cur = []
        for w in out[-1]:
            top = quiver.arrow(w[0]).tgt
            for a in quiver.out_arrows(top):
                cur.append((a.id,) + w)
        cur.sort()
        out.append(cur)
    return out


class _Echelon:
    """Sparse row echelon over the scalar field, columns totally ordered."""

    def __init__(self):
        self.rows = {}  # pivot column -> {column: coefficient}, pivot coeff 1

    def reduce(self, row):
        while row:
            lead = min(row)
            piv = self.rows.get(lead)
            if piv is None:
                inv = RF_ONE / row[lead]
                normalized = {c: x * inv for c, x in row.items()}
                self.rows[lead] = normalized
                return lead
            f = row[lead]
            for c, x in piv.items():
                s = row.get(c)
                s = -f * x if s is None else s - f * x
                if s.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = s
        return None


def truncated_quotient(qp, n, shuffle=None):
    """Degree-graded dimensions of the Jacobian quotient, truncated at degree n.

    Stops as soon as a degree with zero surviving classes certifies
    finiteness. An optional random.Random shuffles the spanning elements
    of each stage, which must not change the result.
    """
    if n < 2:
        raise ValueError("truncation degree must be >= 2")
    q = qp.quiver
    if not qp.is_proper():
        raise ValueError("potential must lie in the square of the arrow ideal")
    by_deg = _paths_by_degree(q, n)
    col_index = [None] * (n + 1)
    for d in range(1, n + 1):
        col_index[d] = {w: (d, i) for i, w in enumerate(by_deg[d])}

    derivs = []
    for a in q.arrows:
        ps = cyclic_derivative(qp.potential, a.id)
        if ps.lazy:
            raise ValueError("potential with loop cycles is outside this computation")
        if ps.terms:
            terms = sorted(ps.terms.items())
            mindeg = min(len(w) for w, _ in terms)
            derivs.append((a, terms, mindeg))

    starts = {v: [[] for _ in range(n + 1)] for v in q.vertices}
    ends = {v: [[] for _ in range(n + 1)] for v in q.vertices}
    for v in q.vertices:
        starts[v][0].append(())
        ends[v][0].append(())
    for d in range(1, n + 1):
        for w in by_deg[d]:
            starts[q.arrow(w[-1]).src][d].append(w)
            ends[q.arrow(w[0]).tgt][d].append(w)

    ech = _Echelon()
    pivots_per_degree = [0] * (n + 1)
    dims = [len(q.vertices)] + [None] * n
    basis = [tuple(by_deg[0])]
    leading = [()]
    stabilized_at = None

    for stage in range(1, n + 1):
        stage_rows = []
        for a, terms, mindeg in derivs:
            pq_budget = stage - mindeg
            if pq_budget < 0:
                continue
            for dp in range(pq_budget + 1):
                dq = pq_budget - dp
                for p in starts[a.src][dp]:
                    for qq in ends[a.tgt][dq]:
                        row = {}
                        for w, c in terms:
                            full = p + w + qq
                            if len(full) <= n:
                                key = col_index[len(full)][full]
                                s = row.get(key)
                                s = c if s is None else s + c
                                if s.is_zero():
                                    row.pop(key, None)
                                else:
                                    row[key] = s
                        if row:
                            stage_rows.append(row)
        if shuffle is not None:
            shuffle.shuffle(stage_rows)
        for row in stage_rows:
            lead = ech.reduce(row)
            if lead is not None:
                pivots_per_degree[lead[0]] += 1
        dims[stage] = len(by_deg[stage]) - pivots_per_degree[stage]
        pivot_cols = {c for c in ech.rows if c[0] == stage}
        basis.append(tuple(w for i, w in enumerate(by_deg[stage])
                           if (stage, i) not in pivot_cols))
        leading.append(tuple(by_deg[stage][i] for d, i in sorted(pivot_cols)))
        if dims[stage] == 0 and stage <= n - 1:
            stabilized_at = stage
            for d in range(stage + 1, n + 1):
                dims[d] = 0
            break

    total = None
    pair_dims = None
    if stabilized_at is not None:
        total = sum(dims[:stabilized_at])
        pair_dims = {}
        for v in q.vertices:
            pair_dims[(v, v)] = pair_dims.get((v, v), 0) + 1
        for d in range(1, stabilized_at):
            for w in basis[d]:
                key = (q.arrow(w[-1]).src, q.arrow(w[0]).tgt)
                pair_dims[key] = pair_dims.get(key, 0) + 1

    return TruncatedQuotient(qp, n, tuple(dims), stabilized_at, total,
                             tuple(basis), tuple(leading), pair_dims)


class JacobianResult(NamedTuple):
    finite: bool
    dimension: int | None
    dims: tuple
    stabilized_at: int | None

    def report(self):
        return {"dims": list(self.dims),
                "stabilized_at": self.stabilized_at,
                "total": self.dimension}


def jacobian_dimension(qp, n):
    """finite(d) when the quotient provably stabilizes below the truncation,
    otherwise undetermined with the partial dimension profile."""
    tq = truncated_quotient(qp, n)
    return JacobianResult(tq.stabilized_at is not None, tq.total,
                          tq.dims, tq.stabilized_at)


def is_reduced_qp(qp):
    """Every cyclic derivative lies in the square of the arrow ideal."""
    for a in qp.quiver.arrows:
        ps = cyclic_derivative(qp.potential, a.id)
        if ps.lazy:
            return False
        if any(len(w) < 2 for w in ps.terms):
            return False
    return True


def _cycles_up_to(quiver, n):
    """Canonical cycle words of length 1..n."""
    seen = set()
    by_deg = _paths_by_degree(quiver, n)
    for d in range(1, n + 1):
        for w in by_deg[d]:
            if quiver.arrow(w[-1]).src == quiver.arrow(w[0]).tgt:
                seen.add(canonical_rotation(w))
    return sorted(seen, key=lambda w: (len(w), w))


def _membership(ech, row):
    """True iff the row reduces to zero against the echelon (no insertion)."""
    row = dict(row)
    while row:
        lead = min(row)
        piv = ech.rows.get(lead)
        if piv is None:
            return False
        f = row[lead]
        for c, x in piv.items():
            s = row.get(c)
            s = -f * x if s is None else s - f * x
            if s.is_zero():
                row.pop(c, None)
            else:
                row[c] = s
    return True


def is_rigid_up_to_degree(qp, d, slack=4):
    """Bounded rigidity check: every cycle of length <= d must lie in the
    span of rotation differences plus the ideal, inside degree <= d+slack.

    Returns (True, None) or (False, first failing canonical cycle). This
    is evidence up to the bound, not an unconditional rigidity proof.
    """
    if d < 2:
        raise ValueError("degree bound must be >= 2")
    q = qp.quiver
    bound = d + slack
    by_deg = _paths_by_degree(q, bound)

    # Work modulo rotations: cyclic words are projected onto their canonical
    # rotation, which quotients out the span of rotation differences.
    def col(word):
        if q.arrow(word[-1]).src == q.arrow(word[0]).tgt:
            word = canonical_rotation(word)
        return (len(word), word)

    starts = {v: [[] for _ in range(bound + 1)] for v in q.vertices}
    ends = {v: [[] for _ in range(bound + 1)] for v in q.vertices}
    for v in q.vertices:
        starts[v][0].append(())
        ends[v][0].append(())
    for deg in range(1, bound + 1):
        for w in by_deg[deg]:
            starts[q.arrow(w[-1]).src][deg].append(w)
            ends[q.arrow(w[0]).tgt][deg].append(w)

    ech = _Echelon()
    for a in q.arrows:
        ps = cyclic_derivative(qp.potential, a.id)
        if ps.lazy:
            raise ValueError("potential with loop cycles is outside this computation")
        if not ps.terms:
            continue
        terms = sorted(ps.terms.items())
        mindeg = min(len(w) for w, _ in terms)
        for dp in range(bound - mindeg + 1):
            for dq in range(bound - mindeg - dp + 1):
                for p in starts[a.src][dp]:
                    for qq in ends[a.tgt][dq]:
                        row = {}
                        for w, c in terms:
                            full = p + w + qq
                            if len(full) <= bound:
                                key = col(full)
                                s = row.get(key)
                                s = c if s is None else s + c
                                if s.is_zero():
                                    row.pop(key, None)
                                else:
                                    row[key] = s
                        if row:
                            ech.reduce(row)

    for cyc in _cycles_up_to(q, d):
        if not _membership(ech, {col(cyc): RF_ONE}):
            return False, cyc
    return True, None
