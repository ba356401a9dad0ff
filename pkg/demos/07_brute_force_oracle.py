"""Cross-checking the classification against exhaustive search.

On instances small enough to enumerate, the oracle lists every ring
involution of the idealization as a raw matrix and partitions them into
conjugacy orbits by explicit unit conjugation.  The orbit count must match
the classifier, and the named representatives must land in distinct orbits.
"""

import time

from incalg import IncidenceAlgebra, Poset, PrimeField, classify
from incalg.involutions import base_involution, sigma_lambda
from incalg.oracle import (
    count_units, enumerate_involutions_D, enumerate_units, orbit_partition,
    unit_group_generators,
)

F3 = PrimeField(3)

for name, poset in (("chain2", Poset.from_covers(["a", "b"], [("a", "b")])),
                    ("chain3", Poset.from_covers(["a", "b", "c"],
                                                 [("a", "b"), ("b", "c")]))):
    alg = IncidenceAlgebra(poset, F3)
    lam = poset.involutions()[0]
    print(f"== {name} over F3 ==")
    print("units of the idealization:", count_units(alg, "D"))
    t0 = time.monotonic()
    invs = enumerate_involutions_D(alg)
    print(f"ring involutions found: {len(invs)} "
          f"({time.monotonic() - t0:.1f}s)")
    t0 = time.monotonic()
    partition = orbit_partition(invs, unit_group_generators(alg))
    sizes = sorted(len(b) for b in partition)
    print(f"conjugacy orbits: {len(partition)} with sizes {sizes} "
          f"({time.monotonic() - t0:.1f}s)")
    print("classifier count:", classify(poset, lam, F3).count)
    print()

print("== the four named representatives on chain2 sit in distinct orbits ==")
chain2 = Poset.from_covers(["a", "b"], [("a", "b")])
alg = IncidenceAlgebra(chain2, F3)
lam = chain2.involutions()[0]
invs = enumerate_involutions_D(alg)
units = list(enumerate_units(alg, "D"))
partition = orbit_partition(invs, units)
index = {m.cols: i for i, m in enumerate(invs)}
block_of = {i: bi for bi, block in enumerate(partition) for i in block}
for label, spec in (("plain, sign +1", base_involution(alg, lam, 1)),
                    ("plain, sign -1", base_involution(alg, lam, -1)),
                    ("skew,  sign +1", sigma_lambda(alg, lam, 1)),
                    ("skew,  sign -1", sigma_lambda(alg, lam, -1))):
    print(f"  {label} -> orbit {block_of[index[spec.to_linear().cols]]}")
