"""The idealization ring: pairs [f; i] with the bimodule coordinate
squaring to zero.

Multiplication is [f; m][g; n] = [f g; f n + m g], the unity is [delta; 0],
and a pair is a unit exactly when its ring coordinate is.  Block-structured
lifts turn algebra data (automorphisms, anti-automorphisms, central units,
derivations) into (anti-)automorphisms of the big ring.
"""

from .derivations import DerivationSpec, leibniz_check
from .errors import (
    ContextMismatch, NotADerivation, NotAMorphism, NotAUnit, NotCentral,
    SizeLimit,
)
from .fia import IncFn, IncidenceAlgebra
from .morphisms import FiaMorphism


class DElem:
    """An element [f; i] of the idealization ring."""

    __slots__ = ("f", "i")

    def __init__(self, f, i):
        if f.alg != i.alg:
            raise ContextMismatch("coordinates over different contexts")
        self.f = f
        self.i = i

    @property
    def alg(self):
        return self.f.alg

    def __add__(self, other):
        _check(self, other)
        return DElem(self.f + other.f, self.i + other.i)

    def __sub__(self, other):
        _check(self, other)
        return DElem(self.f - other.f, self.i - other.i)

    def __neg__(self):
        return DElem(-self.f, -self.i)

    def scale(self, k):
        return DElem(self.f.scale(k), self.i.scale(k))

    def __mul__(self, other):
        _check(self, other)
        return DElem(self.f * other.f, self.f * other.i + self.i * other.f)

    def is_unit(self):
        return self.f.is_unit()

    def inverse(self):
        if not self.f.is_unit():
            raise NotAUnit("ring coordinate is not a unit")
        f_inv = self.f.inverse()
        return DElem(f_inv, -(f_inv * self.i * f_inv))

    def coords(self):
        return self.f.vals + self.i.vals

    def is_central(self):
        alg = self.alg
        return alg.is_central(self.f) and alg.is_central(self.i)

    def to_json(self):
        return {"f": self.f.to_json(), "i": self.i.to_json()}

    def __eq__(self, other):
        return isinstance(other, DElem) and self.f == other.f and self.i == other.i

    def __hash__(self):
        return hash((self.f.vals, self.i.vals))

    def __repr__(self):
        return f"DElem({self.f!r}; {self.i!r})"


def _check(a, b):
    if a.alg != b.alg:
        raise ContextMismatch("operands over different posets or fields")


def d_one(alg):
    return DElem(alg.delta(), alg.zero())


def d_zero(alg):
    return DElem(alg.zero(), alg.zero())


def d_from_coords(alg, coords):
    n = alg.npairs
    return DElem(IncFn(alg, tuple(coords[:n])), IncFn(alg, tuple(coords[n:])))


def d_from_json(alg, obj):
    return DElem(alg.from_json(obj["f"]), alg.from_json(obj["i"]))


def d_basis(alg):
    """Ring-coordinate basis pairs first, then bimodule-coordinate ones."""
    out = []
    for x, y in alg.pairs:
        out.append(DElem(alg.e(x, y), alg.zero()))
    for x, y in alg.pairs:
        out.append(DElem(alg.zero(), alg.e(x, y)))
    return out


def d_center_basis(alg):
    """Pairs of per-component diagonal indicators in each coordinate."""
    out = []
    for c in alg.center_basis():
        out.append(DElem(c, alg.zero()))
        out.append(DElem(alg.zero(), c))
    return out


def central_pair(alg, k1, k2):
    """The central element [k1 delta; k2 delta]."""
    d = alg.delta()
    return DElem(d.scale(alg.field(k1)), d.scale(alg.field(k2)))


def random_delem(alg, rng):
    return DElem(alg.random(rng), alg.random(rng))


def random_d_unit(alg, rng):
    return DElem(alg.random_unit(rng), alg.random(rng))


class DLinearMap:
    """A K-linear endomorphism of the idealization, stored column-wise over
    the doubled comparable-pair basis."""

    __slots__ = ("alg", "cols")

    def __init__(self, alg, cols):
        self.alg = alg
        self.cols = tuple(tuple(c) for c in cols)

    @classmethod
    def from_function(cls, alg, fn):
        return cls(alg, [fn(b).coords() for b in d_basis(alg)])

    @classmethod
    def identity(cls, alg):
        return cls.from_function(alg, lambda d: d)

    def apply(self, d):
        if d.alg != self.alg:
            raise ContextMismatch("map and argument over different contexts")
        field = self.alg.field
        v = d.coords()
        n2 = 2 * self.alg.npairs
        p = field.modulus
        acc = [0 if p is not None else field.zero] * n2
        for j, c in enumerate(v):
            if c == field.zero:
                continue
            col = self.cols[j]
            if p is not None:
                for r in range(n2):
                    acc[r] += c * col[r]
            else:
                for r in range(n2):
                    acc[r] = acc[r] + c * col[r]
        if p is not None:
            acc = [x % p for x in acc]
        return d_from_coords(self.alg, acc)

    def compose(self, other):
        if other.alg != self.alg:
            raise ContextMismatch("maps over different contexts")
        return DLinearMap(
            self.alg,
            [self.apply(d_from_coords(self.alg, col)).coords()
             for col in other.cols])

    def blocks(self):
        """(ring->ring, bimodule->ring, ring->bimodule, bimodule->bimodule)
        blocks as column lists."""
        n = self.alg.npairs
        b11 = [col[:n] for col in self.cols[:n]]
        b21 = [col[n:] for col in self.cols[:n]]
        b12 = [col[:n] for col in self.cols[n:]]
        b22 = [col[n:] for col in self.cols[n:]]
        return b11, b12, b21, b22

    def is_involution(self):
        return self.compose(self) == DLinearMap.identity(self.alg)

    def to_json(self):
        fmt = self.alg.field.format
        return {"blocks": [[fmt(v) for v in col] for col in self.cols]}

    @classmethod
    def from_json(cls, alg, obj):
        parse = alg.field.parse
        return cls(alg, [[parse(v) for v in col] for col in obj["blocks"]])

    def __eq__(self, other):
        return (isinstance(other, DLinearMap) and self.alg == other.alg
                and self.cols == other.cols)

    def __hash__(self):
        return hash(self.cols)


# -- block lifts ------------------------------------------------------------


def lift_morphism(m):
    """Block-diagonal lift of a factored algebra (anti-)automorphism: the
    same factored action runs in both coordinates (for a finite poset the
    bimodule extension has the identical formula)."""
    return DLinearMap.from_function(
        m.alg, lambda d: DElem(m.apply(d.f), m.apply(d.i)))


def lift_auto(m):
    if m.anti:
        raise NotAMorphism("expected an automorphism")
    return lift_morphism(m)


def lift_anti(m):
    if not m.anti:
        raise NotAMorphism("expected an anti-automorphism")
    return lift_morphism(m)


def lift_central(alg, g):
    """[f; i] |-> [f; g i] for a central unit g."""
    if not (g.is_unit() and alg.is_central(g)):
        raise NotCentral("lift requires a central unit")
    return DLinearMap.from_function(alg, lambda d: DElem(d.f, g * d.i))


def lift_scalar(alg, k):
    """The sign-style lift [f; i] |-> [f; k i]."""
    return lift_central(alg, alg.delta().scale(alg.field(k)))


def lift_derivation(alg, d):
    """Unitriangular lift [f; i] |-> [f; D(f) + i]."""
    if isinstance(d, DerivationSpec):
        spec = d
    else:
        if not leibniz_check(alg, d):
            raise NotADerivation("lift requires a derivation")
        spec = d
    return DLinearMap.from_function(
        alg, lambda e: DElem(e.f, spec.apply(e.f) + e.i))


def inner_auto(theta):
    """The inner automorphism of the idealization defined by a unit."""
    if not theta.is_unit():
        raise NotAUnit("inner automorphism needs a unit")
    inv = theta.inverse()
    return DLinearMap.from_function(
        theta.alg, lambda d: theta * d * inv)


def factor_inner(theta):
    """Split conjugation by [f; j] as the lifted ring conjugation followed
    by the derivation lift with -f^-1 j; returns (ring part, derivation)."""
    if not theta.is_unit():
        raise NotAUnit("inner automorphism needs a unit")
    alg = theta.alg
    f, j = theta.f, theta.i
    ring_part = FiaMorphism.inner(alg, f)
    der = DerivationSpec(alg, inner=-(f.inverse() * j))
    return ring_part, der


# -- transfer along order-reversing poset maps ------------------------------


class CrossAntiMap:
    """The anti-isomorphism between idealization rings induced by an
    order-reversing poset bijection."""

    def __init__(self, src_alg, dst_alg, lam):
        self.src = src_alg
        self.dst = dst_alg
        self.lam = lam
        self._lam_inv = lam.inverse()
        perm = []
        for x, y in dst_alg.pairs:
            perm.append(src_alg.pair_index[(self._lam_inv(y), self._lam_inv(x))])
        self._perm = tuple(perm)

    def _move(self, f):
        return IncFn(self.dst, tuple(f.vals[i] for i in self._perm))

    def apply(self, d):
        if d.alg != self.src:
            raise ContextMismatch("argument over the wrong source ring")
        return DElem(self._move(d.f), self._move(d.i))

    def inverse(self):
        return CrossAntiMap(self.dst, self.src, self._lam_inv)


def d_anti_isomorphic(x_poset, y_poset, field, size_bound=None):
    """An order-reversing bijection and the induced ring anti-isomorphism,
    or None when the posets admit no such bijection."""
    kwargs = {} if size_bound is None else {"size_bound": size_bound}
    try:
        maps = x_poset.maps_to(y_poset, anti=True, **kwargs)
    except SizeLimit:
        raise
    if not maps:
        return None
    lam = maps[0]
    src = IncidenceAlgebra(x_poset, field)
    dst = IncidenceAlgebra(y_poset, field)
    return lam, CrossAntiMap(src, dst, lam)
