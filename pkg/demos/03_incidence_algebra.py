"""The incidence algebra: convolution, units, and Mobius inversion.

Elements are functions on the comparable pairs; the product convolves
along interval chains.  Inverting the all-ones function recovers the
classical Mobius function of the poset.
"""

import random

from incalg import IncidenceAlgebra, Poset, QQ, PrimeField

diamond = Poset.from_covers(
    ["0", "a", "b", "1"],
    [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
alg = IncidenceAlgebra(diamond, QQ)

print("== basis products on a chain inside the diamond ==")
print("e(0,a) * e(a,1) =", alg.e("0", "a") * alg.e("a", "1"))
print("e(0,a) * e(0,a) =", alg.e("0", "a") * alg.e("0", "a"))
print("sum of point idempotents equals the unity:",
      sum((alg.e(x, x) for x in diamond.elements), alg.zero()) == alg.delta())

print()
print("== Mobius inversion ==")
zeta = alg.zeta()
mu = alg.mobius()
print("zeta squared at (0,1):", (zeta * zeta)["0", "1"],
      "(counts the chains through the interval)")
print("mu values:", {f"{x},{y}": str(v) for (x, y), v in
                     zip(alg.pairs, mu.vals) if v != 0})
print("zeta * mu == delta:", zeta * mu == alg.delta())

print()
print("== units invert exactly ==")
rng = random.Random(0)
f = alg.random_unit(rng)
print("random unit f:", f)
print("f * f^-1 == delta:", f * f.inverse() == alg.delta())

print()
print("== the center is one-dimensional on a connected poset ==")
print("center basis:", alg.center_basis())
two_chains = Poset.from_covers(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
print("two components give a two-dimensional center:",
      len(IncidenceAlgebra(two_chains, PrimeField(5)).center_basis()))
