"""Classifying the involutions of an idealization ring.

For a connected poset satisfying both hypotheses, the involutions that
induce a fixed order-reversing involution are classified by a sign and,
when the involution has fixed points, a tuple of square classes up to one
global shift.  Without fixed points there are exactly four classes.
"""

import json

from incalg import (
    IncidenceAlgebra, Poset, PrimeField, QQ, classify, equivalent,
    equivalent_inner, rho_eps,
)

F3 = PrimeField(3)
F5 = PrimeField(5)

chain2 = Poset.from_covers(["a", "b"], [("a", "b")])
diamond = Poset.from_covers(["0", "a", "b", "1"],
                            [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
flip = next(m for m in diamond.involutions()
            if m.mapping == {"0": "1", "1": "0", "a": "a", "b": "b"})

print("== no fixed points: the four classes on chain2 over F3 ==")
res = classify(chain2, chain2.involutions()[0], F3)
for spec, inv in zip(res.representatives, res.invariants()):
    print("  ", json.dumps(inv.to_json(), sort_keys=True))

print()
print("== two fixed points: 2 * |S_K| classes on the diamond ==")
for field in (F3, F5):
    res = classify(diamond, flip, field)
    print(f"  over {field.name}: {res.count} classes")

print()
print("== equivalence queries ship witnesses ==")
alg = IncidenceAlgebra(diamond, F3)
s1 = rho_eps(alg, flip, {"a": 1, "b": 1}, 1)
s2 = rho_eps(alg, flip, {"a": 2, "b": 2}, 1)
v = equivalent_inner(s1, s2)
print("scaling both fixed points by a non-square is a global shift:")
print("  ", json.dumps(v.to_json(), sort_keys=True))

s3 = rho_eps(alg, flip, {"a": 1, "b": 2}, 1)
v = equivalent_inner(s1, s3)
print("scaling only one of them is not:")
print("  ", json.dumps(v.to_json(), sort_keys=True))

print()
print("== general equivalence can use a poset automorphism ==")
wide = Poset.from_covers(
    ["0", "a", "b", "c", "1"],
    [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])
wflip = next(m for m in wide.involutions()
             if all(m.mapping[x] == x for x in "abc"))
inner_count = classify(wide, wflip, F3).count
general_count = classify(wide, wflip, F3, general=True).count
print(f"wide diamond over F3: {inner_count} inner classes fold to "
      f"{general_count} general ones")
walg = IncidenceAlgebra(wide, F3)
t1 = rho_eps(walg, wflip, {"a": 1, "b": 1, "c": 2}, 1)
t2 = rho_eps(walg, wflip, {"a": 2, "b": 1, "c": 1}, 1)
print("inner-inequivalent pair:", equivalent_inner(t1, t2).equivalent)
v = equivalent(t1, t2)
print("generally equivalent via the relabeling",
      v.alpha.mapping if v.equivalent else None)

print()
print("== over the rationals the family is infinite ==")
res = classify(diamond, flip, QQ)
print(json.dumps(res.to_json()["family"], indent=2, sort_keys=True))
