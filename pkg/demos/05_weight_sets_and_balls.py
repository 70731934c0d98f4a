"""
Hamming balls and independent weight sets in Z_p^n
==================================================

The ball S collects vectors close (in Hamming distance) to the all-ones
vector; the two-sided weight set I collects vectors whose coordinate
weights stay below n/2 - r in both orientations.  Differences of I-members
are then too light to reach the ball: I is independent in Cay(Z_p^n, S).
"""

from chroma.exact import Surd
from chroma.kneser import (
    classical_binary_independent_set,
    hamming_ball,
    independent_set,
    ones_weight,
)

# -- the coordinate weight behind both sets ---------------------------------

p = 5
for x in (1, 2, 4):
    print(f"weight of coordinate value {x} (p={p}):", ones_weight(p, [x]))

# -- ball sizes grow with the radius ----------------------------------------

print("\nball around the all-ones vector, p=3, n=2:")
for r_sq in (1, 2, 4):
    ball = hamming_ball(3, 2, Surd.sqrt(1, r_sq))
    print(f"  radius sqrt({r_sq}): {ball.to_element_set().count} members")

# -- the default radius is honest about degeneracy --------------------------

res = independent_set(3, 8)
print("\np=3, n=8, default radius p*sqrt(n):",
      "degenerate (threshold %s below zero)" % res.threshold
      if res.degenerate else res.count)

# relaxing to radius sqrt(n) gives a nonempty exact set at desk scale
res = independent_set(3, 8, Surd.sqrt(1, 8))
print("relaxed radius sqrt(8): %d members, exact=%s" % (res.count, res.exact))
print("one member:", res.members_coords()[-1].tolist())

# -- the binary variant collapses to a single weight cutoff -----------------

res = classical_binary_independent_set(9)
print("\nZ_2^9, radius sqrt(9): %d members (vectors of weight <= %s)"
      % (res.count, res.threshold))

# -- beyond the enumeration cap the count is a Monte-Carlo interval ---------

res = independent_set(3, 14, Surd.sqrt(1, 14), cap=1 << 20, seed=1)
print("\np=3, n=14 exceeds the enumeration cap: exact=%s" % res.exact)
print("density in [%.2e, %.2e] (95%% CI, %d samples)"
      % (res.ci_low, res.ci_high, res.samples))
