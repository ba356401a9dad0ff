"""The incidence algebra of a finite poset over an exact field.

For a finite poset the finitary condition is vacuous, so the algebra and
the incidence space coincide: an element is just a function on the
comparable pairs.  Storage is a dense tuple over the canonical interval
basis, multiplication is the convolution

    (f g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y),

and the diagonal-ones function is the unity.
"""

from fractions import Fraction

from .errors import ContextMismatch, NotAUnit, NotComparable


class IncidenceAlgebra:
    """Context object binding a poset and a field; builds IncFn values."""

    def __init__(self, poset, field):
        self.poset = poset
        self.field = field
        self.pairs = poset.pairs
        self.npairs = len(self.pairs)
        self.pair_index = poset.pair_index
        # conv[k] lists the index pairs (i, j) contributing f[i]*g[j] to
        # entry k of a product
        conv = []
        for x, y in self.pairs:
            terms = []
            for z in poset.between(x, y):
                terms.append((self.pair_index[(x, z)], self.pair_index[(z, y)]))
            conv.append(tuple(terms))
        self.conv = tuple(conv)
        self._diag = tuple(k for k, (x, y) in enumerate(self.pairs) if x == y)
        # pair indices ordered by interval size, for back-substitution
        self._by_interval = sorted(
            range(self.npairs), key=lambda k: len(self.conv[k]))

    # -- constructors -----------------------------------------------------

    def zero(self):
        return IncFn(self, (self.field.zero,) * self.npairs)

    def delta(self):
        """The unity: ones on the diagonal."""
        one, zero = self.field.one, self.field.zero
        return IncFn(self, tuple(
            one if x == y else zero for x, y in self.pairs))

    def e(self, x, y):
        """Indicator of the single comparable pair (x, y)."""
        if (x, y) not in self.pair_index:
            raise NotComparable(f"{x!r} is not below {y!r}")
        k = self.pair_index[(x, y)]
        zero = self.field.zero
        return IncFn(self, tuple(
            self.field.one if i == k else zero for i in range(self.npairs)))

    def zeta(self):
        """All ones; its inverse is the Mobius function."""
        return IncFn(self, (self.field.one,) * self.npairs)

    def mobius(self):
        return self.zeta().inverse()

    def element(self, entries):
        """Build from a {(x, y): value} dict; missing pairs are zero."""
        vals = [self.field.zero] * self.npairs
        for (x, y), v in entries.items():
            if (x, y) not in self.pair_index:
                raise NotComparable(f"{x!r} is not below {y!r}")
            vals[self.pair_index[(x, y)]] = self.field(v)
        return IncFn(self, tuple(vals))

    def diagonal(self, values):
        """Diagonal element from a {x: value} dict (missing points zero)."""
        return self.element({(x, x): v for x, v in values.items()})

    def from_json(self, obj):
        entries = {}
        for key, sval in obj.get("entries", {}).items():
            x, _, y = key.partition(",")
            entries[(x.strip(), y.strip())] = self.field.parse(sval)
        return self.element(entries)

    def random(self, rng):
        return IncFn(self, tuple(
            self.field.random(rng) for _ in range(self.npairs)))

    def random_unit(self, rng):
        f = self.field
        return IncFn(self, tuple(
            f.random_nonzero(rng) if x == y else f.random(rng)
            for x, y in self.pairs))

    # -- structure ---------------------------------------------------------

    def center_basis(self):
        """One diagonal component-indicator per connected component."""
        out = []
        for comp in self.poset.components():
            out.append(self.element({(x, x): self.field.one for x in comp}))
        return out

    def is_central(self, f):
        """Central means diagonal and constant on each component."""
        if any(f.vals[k] != self.field.zero
               for k in range(self.npairs) if k not in self._diag):
            return False
        for comp in self.poset.components():
            vals = {f[x, x] for x in comp}
            if len(vals) > 1:
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, IncidenceAlgebra)
                and self.poset == other.poset and self.field == other.field)

    def __hash__(self):
        return hash((self.poset, self.field))

    def __repr__(self):
        return f"IncidenceAlgebra({self.poset!r}, {self.field!r})"


def _check_context(a, b):
    if a.alg != b.alg:
        raise ContextMismatch("operands over different posets or fields")


class IncFn:
    """An incidence function: dense values over the comparable-pair basis."""

    __slots__ = ("alg", "vals")

    def __init__(self, alg, vals):
        self.alg = alg
        self.vals = vals

    def __getitem__(self, xy):
        k = self.alg.pair_index.get(xy)
        return self.alg.field.zero if k is None else self.vals[k]

    def __add__(self, other):
        _check_context(self, other)
        add = self.alg.field.add
        return IncFn(self.alg, tuple(map(add, self.vals, other.vals)))

    def __sub__(self, other):
        _check_context(self, other)
        f = self.alg.field
        return IncFn(self.alg, tuple(
            f.sub(a, b) for a, b in zip(self.vals, other.vals)))

    def __neg__(self):
        neg = self.alg.field.neg
        return IncFn(self.alg, tuple(map(neg, self.vals)))

    def scale(self, k):
        mul = self.alg.field.mul
        return IncFn(self.alg, tuple(mul(k, v) for v in self.vals))

    def __mul__(self, other):
        _check_context(self, other)
        a, b = self.vals, other.vals
        p = self.alg.field.modulus
        if p is not None:
            return IncFn(self.alg, tuple(
                sum(a[i] * b[j] for i, j in terms) % p
                for terms in self.alg.conv))
        zero = Fraction(0)
        return IncFn(self.alg, tuple(
            sum((a[i] * b[j] for i, j in terms), zero)
            for terms in self.alg.conv))

    def is_unit(self):
        zero = self.alg.field.zero
        return all(self.vals[k] != zero for k in self.alg._diag)

    def inverse(self):
        """Two-sided inverse by back-substitution along interval containment."""
        alg, f = self.alg, self.alg.field
        vals = self.vals
        for k in alg._diag:
            if vals[k] == f.zero:
                x = alg.pairs[k][0]
                raise NotAUnit(f"zero diagonal at {x!r}", x)
        inv = [None] * alg.npairs
        for k in alg._by_interval:
            x, y = alg.pairs[k]
            dx = f.inv(vals[alg.pair_index[(x, x)]])
            if x == y:
                inv[k] = dx
                continue
            acc = f.zero
            for i, j in alg.conv[k]:
                if alg.pairs[i] == (x, x):
                    continue
                acc = f.add(acc, f.mul(vals[i], inv[j]))
            inv[k] = f.neg(f.mul(dx, acc))
        return IncFn(alg, tuple(inv))

    def diagonal_values(self):
        return {x: self.vals[self.alg.pair_index[(x, x)]]
                for x in self.alg.poset.elements}

    def support(self):
        zero = self.alg.field.zero
        return tuple(p for p, v in zip(self.alg.pairs, self.vals) if v != zero)

    def is_central(self):
        return self.alg.is_central(self)

    def to_json(self):
        f = self.alg.field
        return {"entries": {f"{x},{y}": f.format(v)
                            for (x, y), v in zip(self.alg.pairs, self.vals)
                            if v != f.zero}}

    def __eq__(self, other):
        return (isinstance(other, IncFn) and self.alg == other.alg
                and self.vals == other.vals)

    def __hash__(self):
        return hash(self.vals)

    def __repr__(self):
        parts = [f"{v}*e({x},{y})"
                 for (x, y), v in zip(self.alg.pairs, self.vals)
                 if v != self.alg.field.zero]
        return "IncFn(" + (" + ".join(parts) if parts else "0") + ")"


def center_basis(poset, field):
    return IncidenceAlgebra(poset, field).center_basis()
