"""Finite posets, their symmetries, and the split induced by an involution.

A poset involution is an order-reversing bijection of order two.  Its
fixed points, together with a down-closed half and an up-closed half of
the rest, organize everything the classification does later.
"""

import json

from incalg import Poset, lambda_decomposition

diamond = Poset.from_covers(
    ["0", "a", "b", "1"],
    [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])

print("== the diamond ==")
print("covers:", diamond.covers)
print("connected:", diamond.is_connected())
print("elements comparable with everything:",
      sorted(diamond.all_comparable_elements()))

print()
print("== symmetries ==")
print("automorphisms:")
for m in diamond.automorphisms():
    print("  ", json.dumps(m.to_json(), sort_keys=True))
print("involutions (order-reversing, order two):")
for m in diamond.involutions():
    print("  ", json.dumps(m.to_json(), sort_keys=True))

print()
print("== lower/upper/fixed split ==")
for lam in diamond.involutions():
    d = lambda_decomposition(diamond, lam)
    print(f"  involution {lam.mapping}")
    print(f"    lower {d.lower}  upper {d.upper}  fixed {d.fixed}")

print()
print("== a poset with no order-reversing symmetry ==")
vee = Poset.from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])
print("vee anti-automorphisms:", vee.anti_automorphisms())
print("(so its idealization ring admits no involution over any field)")

wedge = Poset.from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])
print("but vee and wedge are related by an order-reversing bijection:")
for m in vee.maps_to(wedge, anti=True):
    print("  ", json.dumps(m.to_json(), sort_keys=True))
