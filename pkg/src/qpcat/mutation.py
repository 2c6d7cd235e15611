"""DWZ mutation of quivers with potentials.

premutate builds the unreduced mutation: composites through the chosen
vertex, reversed arrows, the potential with through-pairs collapsed plus
the triangle correction terms. split_reduce then splits off the trivial
part: the quadratic block is normalized to matched arrow pairs by a linear
change, the pairs are eliminated by iterated substitutions (each pass
strictly raises the degree at which eliminated arrows can still appear, so
the loop terminates within the truncation), and the matched arrows are
deleted. qp_mutate is the composite; the composed substitution is returned
by split_reduce as an auditable witness of the right equivalence.
"""

from __future__ import annotations

from typing import NamedTuple

from .potential import (Potential, PotentialError, QP, Substitution,
                        canonical_rotation, cyclic_normal_form)
from .quiver import Arrow, Quiver, composite_id, reverse_id
from .scalars import RF_ONE, rf


class MutationError(ValueError):
    pass


def _check_premutation_preconditions(qp, k):
    q = qp.quiver
    if k not in set(q.vertices):
        raise MutationError("vertex %r is not in the quiver" % k)
    loops = q.loops()
    if loops:
        raise MutationError("premutation requires a loop-free quiver; found loop %s"
                            % loops[0].id)
    for a, b in q.two_cycle_pairs():
        if k in (a.src, a.tgt):
            raise MutationError(
                "premutation at %s blocked by the 2-cycle through it (arrows %s, %s)"
                % (k, a.id, b.id))


def _rotate_off_vertex(q, word, k):
    """Rotation of a cycle word whose base vertex differs from k.

    The base of (a1 ... am) is src(am) = tgt(a1); loop-freeness guarantees
    some rotation avoids k.
    """
    for r in range(len(word)):
        rot = word[r:] + word[:r]
        if q.arrow(rot[-1]).src != k:
            return rot
    raise MutationError("cycle %r never leaves vertex %s" % (list(word), k))


def premutate(qp, k, truncation=16):
    """Unreduced DWZ mutation at vertex k.

    New quiver: arrows avoiding k survive, every path i -> k -> j gains the
    composite [alpha beta], arrows at k are reversed. New potential: each
    cycle with its through-k pairs collapsed to composites, plus the sum of
    triangle terms [alpha beta] beta* alpha* over all pairs through k.
    """
    k = str(k)
    _check_premutation_preconditions(qp, k)
    q = qp.quiver

    incoming = sorted(q.in_arrows(k), key=lambda a: a.id)
    outgoing = sorted(q.out_arrows(k), key=lambda a: a.id)
    kept = [a for a in q.arrows if a.src != k and a.tgt != k]
    composites = [Arrow(composite_id(al.id, be.id), be.src, al.tgt)
                  for be in incoming for al in outgoing]
    reversed_ = [Arrow(reverse_id(a.id), a.tgt, a.src)
                 for a in q.arrows if a.src == k or a.tgt == k]
    new_q = Quiver(q.vertices, kept + composites + reversed_)

    raw_terms = []
    for word, coef in qp.potential.terms.items():
        rot = _rotate_off_vertex(q, word, k)
        out = []
        p = 0
        m = len(rot)
        while p < m:
            a = rot[p]
            if p + 1 < m and q.arrow(a).src == k:
                out.append(composite_id(a, rot[p + 1]))
                p += 2
            else:
                out.append(a)
                p += 1
        raw_terms.append((coef, tuple(out)))

    for be in incoming:
        for al in outgoing:
            raw_terms.append((RF_ONE, (composite_id(al.id, be.id),
                                       reverse_id(be.id), reverse_id(al.id))))

    return QP(new_q, cyclic_normal_form(raw_terms, new_q))


class ReduceResult(NamedTuple):
    qp: QP
    witness: Substitution        # on the unreduced quiver, before arrow deletion
    removed_arrows: tuple
    truncation: int
    overflow: bool               # some expansion dropped terms beyond the truncation


def _pairing_blocks(qp):
    """Quadratic terms grouped by unordered vertex pair.

    Yields (i, j, A, B, M): A the sorted arrow ids i -> j, B the sorted ids
    j -> i, and M[(a, b)] the coefficient of the 2-cycle word joining them.
    """
    q = qp.quiver
    blocks = {}
    for word, coef in qp.potential.quadratic_terms().items():
        x = q.arrow(word[0])
        key = tuple(sorted((x.src, x.tgt)))
        if key not in blocks:
            i, j = key
            A = sorted(a.id for a in q.arrows if a.src == i and a.tgt == j)
            B = sorted(a.id for a in q.arrows if a.src == j and a.tgt == i)
            blocks[key] = (i, j, A, B, {})
        i, j, A, B, M = blocks[key]
        if x.src == i:
            a_id, b_id = word[0], word[1]
        else:
            a_id, b_id = word[1], word[0]
        M[(a_id, b_id)] = coef
    return [blocks[key] for key in sorted(blocks)]


def _normalize_quadratic(qp, truncation):
    """Linear change of arrows making the quadratic part a sum of matched
    pairs with coefficient one; returns (substitution, matched pairs)."""
    q = qp.quiver
    images = {}
    matched = []
    for i, j, A, B, M in _pairing_blocks(qp):
        if not A or not B:
            raise MutationError(
                "quadratic term with no opposite arrows between %s and %s" % (i, j))
        na, nb = len(A), len(B)
        mat = [[M.get((a, b), rf(0)) for b in B] for a in A]
        X = [[RF_ONE if r == c else rf(0) for c in range(na)] for r in range(na)]
        Y = [[RF_ONE if r == c else rf(0) for c in range(nb)] for r in range(nb)]
        # two-sided Gaussian: maintain mat = X * M * Y, stop at a leading
        # identity block; pivots of least complexity limit coefficient growth
        rank = 0
        while rank < min(na, nb):
            piv = None
            best = None
            for r in range(rank, na):
                for c in range(rank, nb):
                    if not mat[r][c].is_zero():
                        w = mat[r][c].complexity
                        if best is None or w < best:
                            best, piv = w, (r, c)
            if piv is None:
                break
            r0, c0 = piv
            mat[rank], mat[r0] = mat[r0], mat[rank]
            X[rank], X[r0] = X[r0], X[rank]
            for row in mat:
                row[rank], row[c0] = row[c0], row[rank]
            for row in Y:
                row[rank], row[c0] = row[c0], row[rank]
            inv = RF_ONE / mat[rank][rank]
            mat[rank] = [x * inv for x in mat[rank]]
            X[rank] = [x * inv for x in X[rank]]
            for r in range(na):
                if r != rank and not mat[r][rank].is_zero():
                    f = mat[r][rank]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
                    X[r] = [x - f * y for x, y in zip(X[r], X[rank])]
            for c in range(nb):
                if c != rank and not mat[rank][c].is_zero():
                    f = mat[rank][c]
                    for r in range(na):
                        mat[r][c] = mat[r][c] - f * mat[r][rank]
                    for r in range(nb):
                        Y[r][c] = Y[r][c] - f * Y[r][rank]
            rank += 1

        # substitution on the old arrows: phi(A[t]) = sum_s X[s][t] A[s] and
        # phi(B[u]) = sum_r Y[u][r] B[r] turn the coefficient matrix into
        # X * M * Y, the leading identity block computed above
        for t, a in enumerate(A):
            images[a] = [(X[s][t], (A[s],)) for s in range(na) if not X[s][t].is_zero()]
        for u, b in enumerate(B):
            images[b] = [(Y[u][r], (B[r],)) for r in range(nb) if not Y[u][r].is_zero()]
        matched.extend((A[s], B[s]) for s in range(rank))
    phi = Substitution(q, images, truncation)
    phi.require_invertible()
    return phi, matched


def split_reduce(qp, truncation=16):
    """Split off the trivial part of a QP whose quadratic terms are 2-cycles.

    Returns the reduced QP (no quadratic potential terms, eliminated arrows
    deleted) together with the composed substitution realizing the
    splitting on the unreduced quiver.
    """
    q = qp.quiver
    if q.loops():
        raise MutationError("reduction expects a loop-free quiver")
    if not qp.is_proper():
        raise PotentialError("potential must lie in the square of the arrow ideal")

    witness = Substitution.identity(q, truncation)
    if not qp.potential.quadratic_terms():
        return ReduceResult(qp, witness, (), truncation, False)

    overflow = [qp.potential.max_cycle_len() > truncation]
    phi_lin, matched = _normalize_quadratic(qp, truncation)
    W = phi_lin.apply_to_potential(qp.potential, check=False, overflow=overflow)
    witness = witness.then(phi_lin)

    matched_ids = {a for pair in matched for a in pair}
    pair_of = {}
    for a, b in matched:
        pair_of[a] = (a, b, "left")
        pair_of[b] = (a, b, "right")
    quad_words = {canonical_rotation((a, b)) for a, b in matched}

    for _pass in range(truncation + 2):
        corrections = {}
        for word, coef in W.terms.items():
            if word in quad_words:
                continue
            hit = next((p for p, x in enumerate(word) if x in matched_ids), None)
            if hit is None:
                continue
            rot = word[hit:] + word[:hit]
            a, b, side = pair_of[rot[0]]
            # the matched 2-cycle has coefficient one, so subtracting the
            # rotated remainder from the partner arrow cancels this term
            target = b if side == "left" else a
            corrections.setdefault(target, []).append((coef, rot[1:]))
        if not corrections:
            break
        images = {t: [(RF_ONE, (t,))] + [(-c, w) for c, w in combos]
                  for t, combos in corrections.items()}
        phi = Substitution(q, images, truncation)
        W = phi.apply_to_potential(W, check=False, overflow=overflow)
        witness = witness.then(phi)
    else:
        raise MutationError("reduction did not converge within the truncation")

    quad = W.quadratic_terms()
    for w in quad_words:
        if quad.get(w) != RF_ONE:
            raise MutationError("normalized quadratic block lost a matched pair")
    if set(quad) != quad_words:
        raise MutationError("unexpected quadratic terms survived reduction")

    reduced_q = Quiver(q.vertices, [a for a in q.arrows if a.id not in matched_ids])
    terms = {w: c for w, c in W.terms.items() if w not in quad_words}
    for w in terms:
        if any(x in matched_ids for x in w):
            raise MutationError("eliminated arrow survives in the reduced potential")
    reduced = QP(reduced_q, Potential(reduced_q, terms))
    return ReduceResult(reduced, witness, tuple(sorted(matched_ids)),
                        truncation, overflow[0])


def qp_mutate(qp, k, truncation=16):
    """DWZ mutation: premutation followed by reduction.

    The output has no loops; whether it is 2-acyclic is for the caller to
    inspect (a 2-cycle with no quadratic potential term survives reduction,
    which is exactly how a degenerate direction shows up).
    """
    pre = premutate(qp, k, truncation)
    return split_reduce(pre, truncation).qp


class MutationTrace(NamedTuple):
    """A mutation path with the QP after each step."""
    start: QP
    steps: tuple                 # of (vertex, QP)
    truncation: int

    @property
    def sequence(self):
        return tuple(v for v, _ in self.steps)

    @property
    def two_acyclic_throughout(self):
        return (self.start.two_acyclic()
                and all(qp.two_acyclic() for _, qp in self.steps))

    def report(self):
        return {"sequence": list(self.sequence),
                "two_acyclic": self.two_acyclic_throughout,
                "truncation": self.truncation}


class ExploreResult(NamedTuple):
    passed: bool
    complete: bool
    failing_trace: MutationTrace | None
    mutations_done: int
    depth: int


def nondegeneracy_explore(qp, depth, truncation=16, prune_backtracks=True,
                          budget=100000):
    """Exhaust mutation sequences up to the given depth, checking 2-acyclicity.

    Breadth-first, so a failure is reported with a shortest trace.
    Immediate back-mutations are pruned by default (mutation is involutive
    up to right equivalence, so revisiting the same vertex cannot produce a
    new quiver); full enumeration is available for auditing. A pass is
    evidence of non-degeneracy to this depth only, never a proof; running
    out of budget flags the result incomplete.
    """
    if not qp.two_acyclic():
        return ExploreResult(False, True, MutationTrace(qp, (), truncation), 0, depth)

    done = 0
    complete = True
    frontier = [((), None, qp)]
    for _level in range(depth):
        nxt = []
        for steps, last, cur in frontier:
            for k in cur.quiver.vertices:
                if prune_backtracks and k == last:
                    continue
                if done >= budget:
                    complete = False
                    continue
                done += 1
                child = qp_mutate(cur, k, truncation)
                child_steps = steps + ((k, child),)
                if not child.two_acyclic():
                    trace = MutationTrace(qp, child_steps, truncation)
                    return ExploreResult(False, True, trace, done, depth)
                nxt.append((child_steps, k, child))
        frontier = nxt
    return ExploreResult(True, complete, None, done, depth)
