"""QP-mutation: premutation, splitting off the trivial part, exploration.

Run:  python3 demos/03_dwz_mutation.py
"""

from qpcat import (Quiver, make_qp, nondegeneracy_explore, premutate, q2222_qp,
                   qp_mutate, rf, split_reduce)
from qpcat.jsonio import potential_to_text

q3 = Quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")])
qp3 = make_qp(q3, [(1, ("z", "y", "x"))])

# Premutation at vertex 1: the pass through 1 collapses to the composite
# [x z], arrows at 1 reverse, and the triangle term [x z] z* x* appears.
pre = premutate(qp3, "1")
print("premutated quiver:", sorted((a.id, a.src, a.tgt) for a in pre.quiver.arrows))
print("premutated potential:", potential_to_text(pre.potential))

# Reduction eliminates the matched 2-cycle pair ([x z], y); the witness
# substitution realizes the splitting and can be audited.
red = split_reduce(pre)
print("reduced quiver:", sorted(a.id for a in red.qp.quiver.arrows))
print("reduced potential:", potential_to_text(red.qp.potential))
print("removed:", red.removed_arrows)
audited = red.witness.apply_to_potential(pre.potential, check=False)
print("witness turns the potential into the bare trivial part:",
      potential_to_text(audited))

# Mutating the zero potential at a through-vertex is NOT the zero potential:
# the triangle terms stay (they are what makes mutation involutive).
lin = make_qp(Quiver(["1", "2", "3"],
                     [("a", "1", "2"), ("b", "2", "3")]), [])
once = qp_mutate(lin, "2")
print("\nmu_2(linear, 0):", potential_to_text(once.potential))
back = qp_mutate(once, "2")
print("mu_2 mu_2 restores zero:", back.potential.is_zero())

# Non-degeneracy exploration: every mutation path of bounded length must
# stay 2-acyclic. The zero potential on the 3-cycle fails immediately; the
# tubular potential passes at depth 3 with symbolic coefficients.
bad = nondegeneracy_explore(make_qp(q3, []), 2)
print("\nzero potential on the 3-cycle:",
      "fails at" if not bad.passed else "passes",
      bad.failing_trace.report() if bad.failing_trace else "")
good = nondegeneracy_explore(q2222_qp(), 3, truncation=16)
print("q2222 symbolic, depth 3: passed =", good.passed,
      "(%d mutations checked)" % good.mutations_done)
