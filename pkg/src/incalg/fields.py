"""Exact field arithmetic over the rationals and prime fields.

Values are kept in canonical raw form rather than wrapped: a rational is a
``fractions.Fraction`` (reduced, positive denominator) and a prime-field
element is an ``int`` in ``[0, p)``.  A ``Field`` object supplies the
operations, parsing, square detection and the square-class group
``S_K = K*/(K*)^2``.

Square classes are represented by ``SquareClass``: a one-bit square /
non-square flag for GF(p), and a signed squarefree integer for Q.
Squarefree parts are found by trial division, so rational inputs are
limited to desk scale (numerator and denominator at most ``10**12``).
"""

from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainMismatch, ParseError, SizeLimit, ZeroArgument

# Trial division covers primes up to 10**6, enough to certify squarefree
# parts for magnitudes up to SQUAREFREE_BOUND.
SQUAREFREE_BOUND = 10**12
_TRIAL_BOUND = 10**6

# Exhaustive square-root scan is kept to desk-scale moduli.
SQRT_SCAN_BOUND = 10**4


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _signed_squarefree(n, d):
    """Signed squarefree part of the rational n/d (classes agree: n/d = nd/d^2)."""
    m = abs(n * d)
    sign = -1 if (n < 0) != (d < 0) else 1
    if m > SQUAREFREE_BOUND * SQUAREFREE_BOUND:
        raise SizeLimit(f"magnitude {m} exceeds the squarefree factorization bound")
    out = 1
    q = 2
    while q <= _TRIAL_BOUND and q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if e % 2:
                out *= q
        q += 1 if q == 2 else 2
    if m > 1:
        r = isqrt(m)
        if r * r == m:
            pass  # leftover is a prime square
        elif m <= SQUAREFREE_BOUND:
            # no factor <= 10**6 and not a square: prime or product of two
            # distinct primes, squarefree either way
            out *= m
        else:
            raise SizeLimit(f"cannot certify squarefree part of {m}")
    return sign * out


class SquareClass:
    """An element of the square-class group S_K = K*/(K*)^2.

    Multiplication of classes matches multiplication of representatives and
    every class is its own inverse (S_K has exponent 2).
    """

    __slots__ = ("kind", "rep")

    def __init__(self, kind, rep):
        self.kind = kind  # "Q" or "F"
        self.rep = rep    # signed squarefree int, or True (square) / False

    def __mul__(self, other):
        if self.kind != other.kind:
            raise DomainMismatch("square classes over different fields")
        if self.kind == "F":
            return SquareClass("F", self.rep == other.rep)
        return SquareClass("Q", _signed_squarefree(self.rep * other.rep, 1))

    def inverse(self):
        return self

    @property
    def is_identity(self):
        return self.rep is True if self.kind == "F" else self.rep == 1

    def __eq__(self, other):
        return (isinstance(other, SquareClass)
                and self.kind == other.kind and self.rep == other.rep)

    def __hash__(self):
        return hash((self.kind, self.rep))

    def __repr__(self):
        if self.kind == "F":
            return "SquareClass(square)" if self.rep else "SquareClass(non-square)"
        return f"SquareClass({self.rep})"


class Field:
    """Common interface of RationalField and PrimeField."""

    modulus = None  # None for Q, the prime p for GF(p)

    @property
    def char(self):
        return 0 if self.modulus is None else self.modulus

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_square(self, a):
        return self.sqrt(a) is not None

    def square_class(self, a):
        raise NotImplementedError

    def __ne__(self, other):
        return not self.__eq__(other)


class RationalField(Field):
    """The field Q with Fraction values."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)
    order = None
    square_class_count = None  # S_Q is infinite

    def __call__(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise ParseError(f"not a rational value: {v!r}")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def parse(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {s!r}") from exc

    def format(self, v):
        return str(v)

    def sqrt(self, a):
        if a < 0:
            return None
        rn, rd = isqrt(a.numerator), isqrt(a.denominator)
        if rn * rn == a.numerator and rd * rd == a.denominator:
            return Fraction(rn, rd)
        return None

    def square_class(self, a):
        a = self(a)
        if a == 0:
            raise ZeroArgument("square class of zero")
        return SquareClass("Q", _signed_squarefree(a.numerator, a.denominator))

    def square_class_reps(self):
        raise SizeLimit("S_Q is infinite; no finite list of representatives")

    def random(self, rng, span=9):
        return Fraction(rng.randint(-span, span), rng.randint(1, span))

    def random_nonzero(self, rng, span=9):
        while True:
            v = self.random(rng, span)
            if v != 0:
                return v

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


class PrimeField(Field):
    """The prime field GF(p), values as ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.modulus = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p
        self.order = p
        self.square_class_count = 1 if p == 2 else 2

    def __call__(self, v):
        if isinstance(v, int):
            return v % self.p
        raise ParseError(f"not a residue: {v!r}")

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, s):
        try:
            return int(s.strip()) % self.p
        except ValueError as exc:
            raise ParseError(f"bad residue {s!r}") from exc

    def format(self, v):
        return str(v % self.p)

    def is_square(self, a):
        a %= self.p
        if a == 0 or self.p == 2:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1  # Euler criterion

    def sqrt(self, a):
        a %= self.p
        if self.p > SQRT_SCAN_BOUND:
            raise SizeLimit(f"square-root scan limited to p < {SQRT_SCAN_BOUND}")
        if not self.is_square(a):
            return None
        for s in range(self.p):  # smaller root first
            if s * s % self.p == a:
                return s
        return None

    def square_class(self, a):
        a = a % self.p
        if a == 0:
            raise ZeroArgument("square class of zero")
        return SquareClass("F", self.is_square(a))

    def square_class_reps(self):
        """One representative per square class, identity first."""
        if self.p == 2:
            return [1]
        for t in range(2, self.p):
            if not self.is_square(t):
                return [1, t]
        raise AssertionError("odd prime field has a non-square")

    def elements(self):
        return range(self.p)

    def nonzero_elements(self):
        return range(1, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()


def parse_field(spec):
    """Parse a field spec string: "Q" or "F<p>" (e.g. "F5")."""
    s = spec.strip()
    if s == "Q":
        return QQ
    if s.startswith("F") and s[1:].isdigit():
        return PrimeField(int(s[1:]))
    raise ParseError(f"bad field spec {spec!r}")


def square_class(field, a):
    """The image of a nonzero element in S_K; constant on square multiples."""
    return field.square_class(a)


def class_eq_up_to_shift(chi1, chi2):
    """Whether two square-class maps on the same domain differ by one global
    S_K factor, i.e. chi2(x) * chi1(x)^-1 is constant."""
    if set(chi1) != set(chi2):
        raise DomainMismatch("square-class maps on different domains")
    if not chi1:
        return True
    ratios = {chi2[x] * chi1[x].inverse() for x in chi1}
    return len(ratios) == 1
