"""Brute-force ground truth on tiny instances.

Everything here works with raw ring arithmetic and exact matrix equality,
sharing no logic with the decision procedures it cross-checks: units are
enumerated coordinate by coordinate, involutions are found by exhausting
conjugated relabel-and-sign maps and testing the square on the basis, and
equivalence classes come from a union-find over explicit conjugations.
"""

from itertools import product

from .errors import NotConnected, SizeLimit
from .fia import IncFn
from .idealization import DElem, DLinearMap, d_basis, inner_auto
from .morphisms import _primitive_root

UNIT_LIMIT = 200_000


def count_units(alg, ring="FI"):
    """Number of units (FI) or of unit pairs (D); finite fields only."""
    q = alg.field.order
    if q is None:
        return None
    n = len(alg.poset.elements)
    strict = alg.npairs - n
    fi_units = (q - 1) ** n * q ** strict
    if ring == "FI":
        return fi_units
    return fi_units * q ** alg.npairs


def enumerate_units(alg, ring="FI", limit=UNIT_LIMIT):
    """Iterator over all units, in lexicographic coordinate order."""
    total = count_units(alg, ring)
    if total is None:
        raise SizeLimit("cannot enumerate units over an infinite field")
    if total > limit:
        raise SizeLimit(f"{total} units exceeds the limit {limit}")
    field = alg.field
    ranges = [tuple(field.nonzero_elements()) if x == y else
              tuple(field.elements()) for x, y in alg.pairs]
    if ring == "FI":
        for vals in product(*ranges):
            yield IncFn(alg, vals)
        return
    full = [tuple(field.elements())] * alg.npairs
    for fvals in product(*ranges):
        f = IncFn(alg, fvals)
        for ivals in product(*full):
            yield DElem(f, IncFn(alg, ivals))


def _canonical_unit_ranges(alg):
    """Coordinate ranges for one unit per central coset: ring diagonal
    pinned to 1 and bimodule diagonal pinned to 0 at the first element."""
    field = alg.field
    head = alg.poset.elements[0]
    f_ranges, i_ranges = [], []
    for x, y in alg.pairs:
        if (x, y) == (head, head):
            f_ranges.append((field.one,))
            i_ranges.append((field.zero,))
        elif x == y:
            f_ranges.append(tuple(field.nonzero_elements()))
            i_ranges.append(tuple(field.elements()))
        else:
            f_ranges.append(tuple(field.elements()))
            i_ranges.append(tuple(field.elements()))
    return f_ranges, i_ranges


def enumerate_involutions_D(alg, limit=UNIT_LIMIT):
    """All ring involutions of the idealization, as deduplicated matrices.

    Exhausts conjugates of every relabel-and-sign map by units taken one
    per central coset, keeps the maps that square to the identity on the
    whole basis, and dedupes by exact matrix equality.
    """
    poset, field = alg.poset, alg.field
    if not poset.is_connected():
        raise NotConnected("central cosets need a connected poset")
    total = count_units(alg, "D")
    if total is None:
        raise SizeLimit("cannot enumerate over an infinite field")
    if total > limit:
        raise SizeLimit(f"{total} units exceeds the limit {limit}")
    basis = d_basis(alg)
    f_ranges, i_ranges = _canonical_unit_ranges(alg)
    minus_one = field.neg(field.one)
    found = {}
    for lam in poset.involutions():
        perm = tuple(alg.pair_index[(lam(y), lam(x))] for x, y in alg.pairs)
        for k in (field.one, minus_one):
            def phi0(d, _perm=perm, _k=k):
                fvals = tuple(d.f.vals[i] for i in _perm)
                if _k == field.one:
                    ivals = tuple(d.i.vals[i] for i in _perm)
                else:
                    ivals = tuple(field.mul(_k, d.i.vals[i]) for i in _perm)
                return DElem(IncFn(alg, fvals), IncFn(alg, ivals))

            for fvals in product(*f_ranges):
                f = IncFn(alg, fvals)
                f_inv = f.inverse()
                for ivals in product(*i_ranges):
                    i = IncFn(alg, ivals)
                    theta = DElem(f, i)
                    theta_inv = DElem(f_inv, -(f_inv * i * f_inv))

                    def phi(d):
                        return theta * phi0(d) * theta_inv

                    if any(phi(phi(b)) != b for b in basis):
                        continue
                    mat = DLinearMap(alg, [phi(b).coords() for b in basis])
                    found.setdefault(mat.cols, mat)
    return list(found.values())


def unit_group_generators(alg):
    """A generating set of the unit group of the idealization: diagonal
    scalings by a primitive root, unipotent pair shifts, and bimodule
    basis shifts."""
    field = alg.field
    if field.order is None:
        raise SizeLimit("generators are enumerated for finite fields only")
    gens = []
    root = _primitive_root(field.order)
    delta, zero = alg.delta(), alg.zero()
    for x in alg.poset.elements:
        vals = {y: (root if y == x else field.one) for y in alg.poset.elements}
        gens.append(DElem(alg.diagonal(vals), zero))
    for x, y in alg.poset.strict_pairs:
        gens.append(DElem(delta + alg.e(x, y), zero))
    for x, y in alg.pairs:
        gens.append(DElem(delta, alg.e(x, y)))
    return gens


def orbit_partition(items, conjugators, extra_maps=()):
    """Partition of ``items`` (matrices) under conjugation.

    ``conjugators`` are units; ``extra_maps`` are (map, inverse) matrix
    pairs joined into the same closure (used for non-inner conjugations).
    Returns a list of index lists; items must be closed under the action.
    """
    index = {m.cols: i for i, m in enumerate(items)}
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    actions = {}
    for g in conjugators:
        psi = inner_auto(g)
        if psi.cols not in actions:
            actions[psi.cols] = (psi, inner_auto(g.inverse()))
    for m, m_inv in extra_maps:
        if m.cols not in actions:
            actions[m.cols] = (m, m_inv)

    for i, item in enumerate(items):
        for psi, psi_inv in actions.values():
            image = psi.compose(item).compose(psi_inv)
            j = index.get(image.cols)
            if j is None:
                raise ValueError("items are not closed under conjugation")
            union(i, j)

    groups = {}
    for i in range(len(items)):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups)]
