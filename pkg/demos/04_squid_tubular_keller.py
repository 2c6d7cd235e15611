"""Weighted lines by genus, the squid, the tubular algebra, Keller's QP.

Run:  python3 demos/04_squid_tubular_keller.py
"""

from qpcat import (canonical_rotation, genus_and_type, keller_qp, lambda_orbit,
                   q2222_qp, quiver_isomorphic, restrict_qp, rf, squid_qp,
                   squid_tube_tops, tubular_algebra, five_vertex_qp)
from qpcat.jsonio import potential_to_text

# Genus decides the trichotomy: below one domestic, exactly one tubular,
# above one wild.
for ws in [(2, 3, 5), (2, 2, 2, 2), (3, 3, 3), (2, 3, 7)]:
    data = genus_and_type(ws)
    print("weights %-12s genus %-5s %s" % (ws, data.genus, data.kind))

# The squid for weights (2, 3, 4): two parallel arrows into the canonical
# shift, one branch per weighted point, a cubic relation block per branch.
sq = squid_qp((2, 3, 4))
print("\nsquid(2,3,4):", len(sq.quiver.vertices), "vertices,",
      len(sq.quiver.arrows), "arrows")
print("potential:", potential_to_text(sq.potential))

# Restricting to the tube tops produces the five-vertex QP on the nose.
sub = restrict_qp(sq, squid_tube_tops((2, 3, 4)))
print("restricted to tube tops:", len(sub.quiver.vertices), "vertices;",
      "isomorphic to the five-vertex quiver:",
      quiver_isomorphic(sub.quiver, five_vertex_qp().quiver) is not None)

# The tubular algebra of type (2,2,2,2): eight arrows, four relations.
# Closing each relation with a return arrow (Keller's construction) gives
# exactly the q2222 potential, term for term.
pres = tubular_algebra()
print("\ntubular relations:")
for name, rel in pres.relations:
    print("  %s: %s" % (name, rel))
built = keller_qp(pres)
target = q2222_qp()
rename = {"rho_r1": "c", "rho_r2": "i", "rho_r3": "h", "rho_r4": "l"}
moved = {canonical_rotation(tuple(rename.get(x, x) for x in w)): c
         for w, c in built.potential.terms.items()}
print("Keller QP equals q2222 QP exactly:", moved == target.potential.terms)

# Two parameters give the same line exactly when they share this orbit.
print("\norbit of L=2:", [str(x) for x in lambda_orbit(rf(2))])
