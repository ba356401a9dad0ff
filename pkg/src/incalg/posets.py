"""Finite posets, their order-preserving and order-reversing symmetries,
and the lower/upper/fixed split of the point set induced by an involution.

Element order is the user-supplied order; all interval-indexed data
downstream (incidence functions, morphism matrices) uses the lexicographic
(x, y) order over this element order.
"""

import json

from .errors import (
    CycleDetected, DuplicateLabel, NoDecomposition, NotComparable, ParseError,
    SizeLimit,
)

# Backtracking symmetry search is exhaustive; keep it to desk scale.
SEARCH_SIZE_BOUND = 12


class Poset:
    """An immutable finite poset.

    ``elements`` is the canonical ordered tuple of labels; ``leq[i][j]``
    says whether element i is below element j.  ``pairs`` lists all
    comparable ordered pairs (x, y), diagonal included, in lexicographic
    index order; this is the interval basis used by the algebra modules.
    """

    def __init__(self, elements, leq_rows):
        self.elements = tuple(elements)
        self.n = len(self.elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != self.n:
            raise DuplicateLabel("poset labels must be distinct")
        self.leq_rows = tuple(tuple(row) for row in leq_rows)
        for i in range(self.n):
            for j in range(self.n):
                if self.leq_rows[i][j] and self.leq_rows[j][i] and i != j:
                    raise CycleDetected(
                        f"{self.elements[i]} and {self.elements[j]} are in a cycle")
        self.pairs = tuple(
            (self.elements[i], self.elements[j])
            for i in range(self.n) for j in range(self.n) if self.leq_rows[i][j])
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self.strict_pairs = tuple((x, y) for x, y in self.pairs if x != y)
        self._between = {}
        for x, y in self.pairs:
            i, j = self.index[x], self.index[y]
            self._between[(x, y)] = tuple(
                self.elements[k] for k in range(self.n)
                if self.leq_rows[i][k] and self.leq_rows[k][j])
        self.covers = tuple(
            (x, y) for x, y in self.strict_pairs if len(self._between[(x, y)]) == 2)

    @classmethod
    def from_covers(cls, elements, cover_pairs):
        """Build from labels and relation pairs; the order is the
        reflexive-transitive closure and must be acyclic."""
        elements = list(elements)
        index = {}
        for x in elements:
            if x in index:
                raise DuplicateLabel(f"duplicate label {x!r}")
            index[x] = len(index)
        n = len(elements)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for x, y in cover_pairs:
            if x not in index or y not in index:
                raise ParseError(f"relation ({x!r}, {y!r}) uses unknown labels")
            leq[index[x]][index[y]] = True
        for k in range(n):  # Warshall closure
            for i in range(n):
                if leq[i][k]:
                    row_i, row_k = leq[i], leq[k]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls(elements, leq)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise ParseError(str(exc)) from exc
        try:
            return cls.from_covers(obj["elements"], [tuple(c) for c in obj["covers"]])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad poset object: {exc}") from exc

    @classmethod
    def from_lines(cls, text):
        """Parse the line format: one "a<b" relation per line; a bare label
        adds an isolated element."""
        elements, seen, rels = [], set(), []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "<" in line:
                a, _, b = line.partition("<")
                a, b = a.strip(), b.strip()
                if not a or not b:
                    raise ParseError(f"bad relation line {raw!r}")
                rels.append((a, b))
                for x in (a, b):
                    if x not in seen:
                        seen.add(x)
                        elements.append(x)
            else:
                if line not in seen:
                    seen.add(line)
                    elements.append(line)
        return cls.from_covers(elements, rels)

    def to_json(self):
        return {"elements": list(self.elements),
                "covers": [list(c) for c in self.covers]}

    def leq(self, x, y):
        return self.leq_rows[self.index[x]][self.index[y]]

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def between(self, x, y):
        try:
            return self._between[(x, y)]
        except KeyError:
            raise NotComparable(f"{x!r} is not below {y!r}") from None

    def down(self, x):
        return tuple(y for y in self.elements if self.leq(y, x))

    def up(self, x):
        return tuple(y for y in self.elements if self.leq(x, y))

    def components(self):
        """Connected components of the comparability graph, in element order."""
        seen, comps = set(), []
        for root in self.elements:
            if root in seen:
                continue
            comp, stack = [], [root]
            seen.add(root)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.elements:
                    if w not in seen and self.comparable(v, w):
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp, key=self.index.get))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1

    def all_comparable_elements(self):
        """Elements comparable with every element of the poset."""
        return {x for x in self.elements
                if all(self.comparable(x, y) for y in self.elements)}

    # -- symmetry enumeration -------------------------------------------

    def maps_to(self, other, anti=False, size_bound=SEARCH_SIZE_BOUND):
        """All order isomorphisms (anti=False) or anti-isomorphisms
        (anti=True) from this poset onto ``other``, by backtracking."""
        if self.n > size_bound or other.n > size_bound:
            raise SizeLimit(f"symmetry search limited to {size_bound} elements")
        if self.n != other.n:
            return []
        src, dst = self.elements, other.elements
        # degree profile must match (reversed for anti-isomorphisms)
        def profile(P, x, flip):
            d, u = len(P.down(x)), len(P.up(x))
            return (u, d) if flip else (d, u)
        out = []
        assign = {}
        used = set()

        def extend(k):
            if k == self.n:
                out.append(PosetMap(self, other, dict(assign), anti))
                return
            x = src[k]
            for y in dst:
                if y in used or profile(self, x, False) != profile(other, y, anti):
                    continue
                ok = True
                for x0, y0 in assign.items():
                    a, b = self.leq(x0, x), self.leq(x, x0)
                    if anti:
                        if a != other.leq(y, y0) or b != other.leq(y0, y):
                            ok = False
                            break
                    else:
                        if a != other.leq(y0, y) or b != other.leq(y, y0):
                            ok = False
                            break
                if ok:
                    assign[x] = y
                    used.add(y)
                    extend(k + 1)
                    del assign[x]
                    used.discard(y)

        extend(0)
        return out

    def automorphisms(self, size_bound=SEARCH_SIZE_BOUND):
        return self.maps_to(self, False, size_bound)

    def anti_automorphisms(self, size_bound=SEARCH_SIZE_BOUND):
        return self.maps_to(self, True, size_bound)

    def involutions(self, size_bound=SEARCH_SIZE_BOUND):
        """Anti-automorphisms squaring to the identity."""
        return [m for m in self.anti_automorphisms(size_bound) if m.is_involution()]

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and self.leq_rows == other.leq_rows)

    def __hash__(self):
        return hash((self.elements, self.leq_rows))

    def __repr__(self):
        return f"Poset({list(self.elements)}, covers={list(self.covers)})"


class PosetMap:
    """A bijection between posets, order-preserving or order-reversing."""

    def __init__(self, src, dst, mapping, anti):
        self.src = src
        self.dst = dst
        self.mapping = dict(mapping)
        self.anti = bool(anti)
        if set(self.mapping) != set(src.elements):
            raise ParseError("map must be defined on every element")
        if set(self.mapping.values()) != set(dst.elements):
            raise ParseError("map must be a bijection onto the target")
        for x in src.elements:
            for y in src.elements:
                lhs = src.leq(x, y)
                rhs = (dst.leq(self.mapping[y], self.mapping[x]) if self.anti
                       else dst.leq(self.mapping[x], self.mapping[y]))
                if lhs != rhs:
                    kind = "anti-isomorphism" if self.anti else "isomorphism"
                    raise ParseError(f"not an order {kind}: fails at ({x!r}, {y!r})")

    def __call__(self, x):
        return self.mapping[x]

    def inverse(self):
        return PosetMap(self.dst, self.src,
                        {v: k for k, v in self.mapping.items()}, self.anti)

    def compose(self, other):
        """self after other; anti flags multiply."""
        if other.dst != self.src:
            raise ParseError("maps not composable")
        return PosetMap(other.src, self.dst,
                        {x: self.mapping[other.mapping[x]] for x in other.src.elements},
                        self.anti != other.anti)

    def is_identity(self):
        return not self.anti and all(v == k for k, v in self.mapping.items())

    def is_involution(self):
        return (self.anti and self.src == self.dst
                and all(self.mapping[self.mapping[x]] == x for x in self.src.elements))

    def fixed_points(self):
        return tuple(x for x in self.src.elements if self.mapping[x] == x)

    def to_json(self):
        return {str(k): str(v) for k, v in self.mapping.items()}

    def __eq__(self, other):
        return (isinstance(other, PosetMap) and self.src == other.src
                and self.dst == other.dst and self.anti == other.anti
                and self.mapping == other.mapping)

    def __hash__(self):
        return hash((self.src, self.dst, self.anti,
                     tuple(sorted(self.mapping.items(), key=repr))))

    def __repr__(self):
        kind = "anti" if self.anti else "auto"
        return f"PosetMap({self.mapping}, {kind})"


def identity_map(poset):
    return PosetMap(poset, poset, {x: x for x in poset.elements}, False)


class LambdaDecomposition:
    """Split of the point set under an involution: a down-closed part,
    its image (up-closed), and the fixed points."""

    def __init__(self, lower, upper, fixed):
        self.lower = tuple(lower)
        self.upper = tuple(upper)
        self.fixed = tuple(fixed)

    def side(self, x):
        if x in self.lower:
            return -1
        if x in self.upper:
            return 1
        return 0

    def __repr__(self):
        return (f"LambdaDecomposition(lower={list(self.lower)}, "
                f"upper={list(self.upper)}, fixed={list(self.fixed)})")


def lambda_decomposition(poset, lam):
    """Deterministic lower/upper/fixed split for a poset involution.

    Each two-point orbit {x, lam(x)} goes to (lower, upper) one way or the
    other; the lower part must be down-closed and the upper part up-closed.
    Orbits are decided in canonical element order with constraint
    propagation, and the first valid assignment wins.
    """
    if not (lam.anti and lam.src == poset and lam.is_involution()):
        raise ParseError("decomposition requires an involution on the poset")
    fixed = set(lam.fixed_points())
    orbits = []
    seen = set(fixed)
    for x in poset.elements:
        if x not in seen:
            seen.add(x)
            seen.add(lam(x))
            orbits.append((x, lam(x)))

    side = {x: 0 for x in fixed}  # -1 lower, +1 upper, 0 fixed

    def place(x, s, trail):
        """Force x onto side s, propagating closure; append moves to trail."""
        cur = side.get(x)
        if cur is not None:
            return cur == s
        side[x] = s
        trail.append(x)
        if not place(lam(x), -s, trail):
            return False
        if s == -1:
            below = (y for y in poset.elements if poset.leq(y, x) and y != x)
            return all(place(y, -1, trail) for y in below)
        above = (y for y in poset.elements if poset.leq(x, y) and y != x)
        return all(place(y, 1, trail) for y in above)

    def solve(k):
        if k == len(orbits):
            return True
        x, y = orbits[k]
        if side.get(x) is not None:
            return solve(k + 1)
        for sx in (-1, 1):
            trail = []
            if place(x, sx, trail) and solve(k + 1):
                return True
            for moved in trail:
                del side[moved]
        return False

    if not solve(0):
        raise NoDecomposition("no down-closed/up-closed split exists")
    lower = [x for x in poset.elements if side[x] == -1]
    upper = [x for x in poset.elements if side[x] == 1]
    return LambdaDecomposition(lower, upper, sorted(fixed, key=poset.index.get))
