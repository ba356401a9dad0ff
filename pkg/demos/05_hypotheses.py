"""The two hypotheses behind the classification, on a pair of 4-point posets.

The fence (a < c > b < d) and the crown (a, b both under c, d) look alike
but behave differently: on the fence every multiplicative automorphism is
inner and every derivation is inner, over any field; on the crown both
properties fail over Q and odd prime fields, and the multiplicative one
recovers only over GF(2).
"""

from incalg import IncidenceAlgebra, Poset, QQ, PrimeField, check_hypotheses
from incalg.derivations import additive_is_inner, find_non_inner_additive
from incalg.morphisms import find_non_inner_cocycle, multiplicative_is_inner

fence = Poset.from_covers(["a", "b", "c", "d"],
                          [("a", "c"), ("b", "c"), ("b", "d")])
crown = Poset.from_covers(["a", "b", "c", "d"],
                          [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])

print("== hypothesis table ==")
for name, poset in (("fence", fence), ("crown", crown)):
    for field in (PrimeField(5), PrimeField(2), QQ):
        report = check_hypotheses(poset, field)
        print(f"  {name:6s} over {getattr(field, 'name', 'Q'):3s}  "
              f"mult_subset_inn={report['mult_subset_inn']!s:5s}  "
              f"der_equals_ider={report['der_equals_ider']!s:5s}")

print()
print("== concrete counterexamples on the crown over F5 ==")
alg = IncidenceAlgebra(crown, PrimeField(5))
sigma = find_non_inner_cocycle(alg)
print("a multiplicative cocycle no diagonal conjugation produces:")
print("  ", {f"{x},{y}": v for (x, y), v in sorted(sigma.items())})
print("  inner witness search returns:", multiplicative_is_inner(alg, sigma))

tau = find_non_inner_additive(alg)
print("an additive cocycle that is not a diagonal coboundary:")
print("  ", {f"{x},{y}": v for (x, y), v in sorted(tau.items())})
print("  inner witness search returns:", additive_is_inner(alg, tau))

print()
print("== and a witness that always exists on the fence ==")
algf = IncidenceAlgebra(fence, QQ)
tau = {("a", "c"): QQ(3), ("b", "c"): QQ(-1), ("b", "d"): QQ(7)}
f = additive_is_inner(algf, tau)
print("diagonal potential for an arbitrary cocycle:", f.diagonal_values())
