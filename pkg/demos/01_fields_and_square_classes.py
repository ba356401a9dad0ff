"""Exact scalars and the square-class group.

Arithmetic is exact in both supported fields: rationals are Fractions and
prime-field elements are residues.  The square-class group S_K = K*/(K*)^2
drives the involution classification later on, so this demo looks at how
square classes multiply and collapse.
"""

from fractions import Fraction

from incalg import QQ, PrimeField, parse_field

F5 = PrimeField(5)
F7 = PrimeField(7)

print("== parsing ==")
print("field spec 'F5' ->", parse_field("F5"))
print("scalar '3/4' in Q ->", QQ.parse("3/4"))
print("scalar '12' in F5 ->", F5.parse("12"))

print()
print("== squares in F7 ==")
squares = sorted({x * x % 7 for x in range(1, 7)})
print("squares mod 7:", squares)
for a in range(1, 7):
    print(f"  sqrt({a}) =", F7.sqrt(a))

print()
print("== square classes ==")
print("class of 4 in F5 (a square):", F5.square_class(4))
print("class of 2 in F5 (not a square):", F5.square_class(2))
print("class of 8 in Q:", QQ.square_class(Fraction(8)), "(squarefree part 2)")
print("class of -18 in Q:", QQ.square_class(Fraction(-18)))
print("class of 1/2 in Q:", QQ.square_class(Fraction(1, 2)))

print()
print("== classes multiply like their representatives ==")
a, b = Fraction(6), Fraction(10)
print(f"class({a}) * class({b}) =", QQ.square_class(a) * QQ.square_class(b))
print(f"class({a * b}) =", QQ.square_class(a * b))

print()
print("== class sizes ==")
print("|S_K| for F2:", PrimeField(2).square_class_count)
print("|S_K| for F5:", F5.square_class_count)
print("|S_K| for Q:", QQ.square_class_count, "(infinite)")
