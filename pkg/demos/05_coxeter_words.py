"""Reduced words by the root test and the word quiver Q(w).

Run:  python3 demos/05_coxeter_words.py
"""

from qpcat import (birs_word, canonical_ct_quiver, gcm_from_quiver, is_reduced,
                   quiver_isomorphic, qw, qw_tilde)
from qpcat.coxeter import partial_roots
from qpcat.quiver import Quiver

# The Coxeter group of an acyclic quiver acts on integer root vectors;
# a word is reduced exactly when every partial root stays positive.
a2 = Quiver(["1", "2"], [("a", "1", "2")])
gcm = gcm_from_quiver(a2)
word = ["1", "2", "1"]
print("word 1,2,1 over A2: reduced =", is_reduced(gcm, word).reduced)
print("partial roots:", partial_roots(gcm, word))
print("word 1,1: ", is_reduced(gcm, ["1", "1"]))

# The word quiver: consecutive equal letters give backward arrows, and
# adjacent letters chain block to block; dropping each letter's last
# occurrence gives Q(w).
print("\nQ~(w) for 1,2,1:",
      sorted((a.src, a.tgt) for a in qw_tilde(a2, word).arrows))
print("Q(w) for 1,2,1:", qw(a2, word).vertices)

# The two word families over star quivers. For every admissible weight
# triple the word is reduced and Q(w) is the star tilting quiver.
for p in [(2, 3, 3), (3, 3, 3), (2, 4, 5), (4, 5, 6)]:
    sw = birs_word(*p)
    ok = is_reduced(gcm_from_quiver(sw.quiver), sw.word).reduced
    built = qw(sw.quiver, sw.word)
    match = quiver_isomorphic(built, canonical_ct_quiver(*p)) is not None
    print("weights %s: |w| = %2d, reduced = %s, Q(w) = star quiver: %s"
          % (p, len(sw.word), ok, match))
