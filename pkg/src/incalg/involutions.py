"""Involutions on the idealization ring: construction, recognition,
invariants, constructive equivalence, and classification.

Every involution here is kept in the factored normal form

    conjugation by a unit  o  lifted order-reversing relabel  o  sign lift,

written InvolutionSpec(theta, lam, k).  The classification work runs under
three standing hypotheses, checked up front: the poset is connected, the
field has characteristic other than 2, and both "multiplicative implies
inner" and "derivations are inner" hold.
"""

from .derivations import additive_is_inner, der_equals_ider, leibniz_check, \
    split_raw_derivation
from .errors import (
    BadSign, Char2Unsupported, ContextMismatch, FixedPointsPresent,
    HypothesisFailed, NotAnInvolution, NotAUnit, NotConnected, NotInvolutive,
    NotSymmetric, NotASquare, ParseError, UpperRightNonzero, ZeroEpsilon,
)
from .fia import IncFn, IncidenceAlgebra
from .fields import class_eq_up_to_shift
from .idealization import (
    DElem, DLinearMap, central_pair, d_basis, d_from_json, d_one, inner_auto,
    lift_morphism,
)
from .linalg import invert_matrix
from .morphisms import (
    FiaMorphism, FiLinearMap, decompose, mult_subset_inn,
    multiplicative_is_inner,
)
from .posets import PosetMap, lambda_decomposition


def check_hypotheses(poset, field):
    """Report on the two classification hypotheses over this field."""
    return {"mult_subset_inn": mult_subset_inn(poset, field),
            "der_equals_ider": der_equals_ider(poset, field)}


def require_classifiable(poset, field):
    if field.char == 2:
        raise Char2Unsupported("classification assumes characteristic != 2")
    if not poset.is_connected():
        raise NotConnected("classification assumes a connected poset")
    report = check_hypotheses(poset, field)
    failed = [name for name, ok in report.items() if not ok]
    if failed:
        raise HypothesisFailed(", ".join(failed))


class InvolutionSpec:
    """A validated involution in factored normal form."""

    def __init__(self, alg, theta, lam, k, _validated=False):
        self.alg = alg
        self.theta = theta
        self.lam = lam
        self.k = alg.field(k)
        if not theta.is_unit():
            raise NotAUnit("factored form needs a unit")
        if theta.alg != alg:
            raise ContextMismatch("unit over a different context")
        if not (lam.anti and lam.src == alg.poset and lam.is_involution()):
            raise ParseError("the poset map must be an involution")
        if alg.field.mul(self.k, self.k) != alg.field.one:
            raise BadSign("sign must square to one")
        self._theta_inv = theta.inverse()
        inv = lam  # involution is its own inverse
        self._perm = tuple(alg.pair_index[(inv(y), inv(x))]
                           for x, y in alg.pairs)
        if not _validated:
            bad = self._find_involution_failure()
            if bad is not None:
                raise NotInvolutive(f"square of the map moves basis element {bad}")

    # -- actions -----------------------------------------------------------

    def base_apply(self, d):
        """The conjugation-free part: relabel both coordinates, scale the
        bimodule one by the sign."""
        field = self.alg.field
        fvals = tuple(d.f.vals[i] for i in self._perm)
        if self.k == field.one:
            ivals = tuple(d.i.vals[i] for i in self._perm)
        else:
            ivals = tuple(field.mul(self.k, d.i.vals[i]) for i in self._perm)
        return DElem(IncFn(self.alg, fvals), IncFn(self.alg, ivals))

    def apply(self, d):
        if d.alg != self.alg:
            raise ContextMismatch("involution and argument over different contexts")
        return self.theta * self.base_apply(d) * self._theta_inv

    def to_linear(self):
        return DLinearMap.from_function(self.alg, self.apply)

    def _find_involution_failure(self):
        for b in d_basis(self.alg):
            if self.apply(self.apply(b)) != b:
                return b
        return None

    # -- invariants ---------------------------------------------------------

    @property
    def sign(self):
        return self.k

    @property
    def induced(self):
        return self.lam

    def decomposition(self):
        return lambda_decomposition(self.alg.poset, self.lam)

    def central_ratio(self):
        """(k0, k1) with base(theta) = [k0 delta; k1 delta] theta; the
        factored form of a genuine involution always admits one."""
        alg = self.alg
        c = self.base_apply(self.theta) * self._theta_inv
        if not c.is_central():
            raise NotAnInvolution("unit is not symmetric up to the center")
        x0 = alg.poset.elements[0]
        k0, k1 = c.f[x0, x0], c.i[x0, x0]
        if c != central_pair(alg, k0, k1):
            raise NotAnInvolution("central ratio is not a scalar pair")
        if alg.field.mul(k0, k0) != alg.field.one:
            raise NotAnInvolution("central ratio has a bad ring part")
        return k0, k1

    def symmetric_form(self):
        """(theta', k0) with theta' defining the same involution and
        base(theta') = k0 theta'; k0 = -1 is the skew (sigma-type) branch,
        possible only without fixed points."""
        field = self.alg.field
        k0, k1 = self.central_ratio()
        if self.k == field.one:
            if k1 != field.zero:
                raise NotAnInvolution("positive sign forces a plain ratio")
            return self.theta, k0
        half = field.inv(field(2))
        gamma = central_pair(self.alg, k0, field.mul(k1, half)) * self.theta
        return gamma, k0

    def invariant(self):
        """The inner-equivalence invariant: induced map, sign, and either
        the fixed-point square-class tuple (up to one global shift) or the
        plain/skew type tag."""
        decomp = self.decomposition()
        theta_sym, k0 = self.symmetric_form()
        field = self.alg.field
        if not decomp.fixed:
            kind = "plain" if k0 == field.one else "skew"
            return ClassInvariant(self.lam, self.k, kind=kind, field=field)
        if k0 != field.one:
            raise NotAnInvolution("skew units cannot occur with fixed points")
        chi = {x: field.square_class(theta_sym.f[x, x]) for x in decomp.fixed}
        return ClassInvariant(self.lam, self.k, chi=chi, fixed=decomp.fixed,
                              field=field)

    def sign_int(self):
        return 1 if self.k == self.alg.field.one else -1

    def to_json(self):
        return {"theta": self.theta.to_json(),
                "lambda": self.lam.to_json(),
                "k": self.sign_int()}

    def __repr__(self):
        return (f"InvolutionSpec(lam={self.lam.mapping}, "
                f"k={self.sign_int()}, theta={self.theta!r})")


class ClassInvariant:
    """What survives inner equivalence: the induced involution, the sign,
    and the square-class data (or the plain/skew tag when there are no
    fixed points)."""

    def __init__(self, lam, sign, kind=None, chi=None, fixed=(), field=None):
        self.lam = lam
        self.sign = sign
        self.kind = kind
        self.fixed = tuple(fixed)
        self.chi = dict(chi) if chi else None
        self.field = field

    def canonical_chi(self):
        """Shift so the first fixed point carries the identity class."""
        if not self.chi:
            return None
        head = self.chi[self.fixed[0]]
        return tuple(self.chi[x] * head.inverse() for x in self.fixed)

    def same_inner_class(self, other):
        if self.lam != other.lam or self.sign != other.sign:
            return False
        if self.kind is not None or other.kind is not None:
            return self.kind == other.kind
        return class_eq_up_to_shift(self.chi, other.chi)

    def to_json(self):
        sign = self.sign
        if self.field is not None:
            sign = 1 if sign == self.field.one else -1
        out = {"lambda": self.lam.to_json(), "sign": sign}
        if self.kind is not None:
            out["kind"] = self.kind
        if self.chi is not None:
            out["chi"] = {str(x): _class_json(c) for x, c in self.chi.items()}
        return out


def _class_json(cls):
    if cls.kind == "F":
        return "square" if cls.rep else "nonsquare"
    return str(cls.rep)


# -- constructions -----------------------------------------------------------


def build(alg, theta, lam, k):
    """Validated involution from factored data; refuses characteristic 2,
    disconnected posets, non-units, bad signs, and maps whose square is
    not the identity."""
    if alg.field.char == 2:
        raise Char2Unsupported("characteristic 2 is construction-only "
                               "and not accepted here")
    if not alg.poset.is_connected():
        raise NotConnected("involution specs assume a connected poset")
    return InvolutionSpec(alg, theta, lam, k)


def base_involution(alg, lam, k=1):
    """The reference involution with trivial conjugator."""
    return build(alg, d_one(alg), lam, k)


def eps_diagonal(alg, decomp, eps):
    """The diagonal unit carrying a nonzero scaling on the fixed points."""
    field = alg.field
    vals = {}
    for x in alg.poset.elements:
        if x in decomp.fixed:
            v = field(eps[x])
            if v == field.zero:
                raise ZeroEpsilon(f"scaling must be nonzero at {x!r}")
            vals[x] = v
        else:
            vals[x] = field.one
    return alg.diagonal(vals)


def split_sign_diagonal(alg, decomp):
    """The diagonal unit that is +1 on the lower part and -1 on the upper
    part (defined when there are no fixed points)."""
    field = alg.field
    vals = {}
    for x in decomp.lower:
        vals[x] = field.one
    for x in decomp.upper:
        vals[x] = field.neg(field.one)
    return alg.diagonal(vals)


def rho_eps(alg, lam, eps, k=1):
    """The involution conjugated by the fixed-point scaling unit; equals
    the plain relabel involution when the scaling is trivial or there are
    no fixed points."""
    decomp = lambda_decomposition(alg.poset, lam)
    u = eps_diagonal(alg, decomp, eps)
    return build(alg, DElem(u, alg.zero()), lam, k)


def sigma_lambda(alg, lam, k=1):
    """The sign-split involution; requires a fixed-point-free involution."""
    decomp = lambda_decomposition(alg.poset, lam)
    if decomp.fixed:
        raise FixedPointsPresent(
            f"fixed points {list(decomp.fixed)} block the sign-split form")
    w = split_sign_diagonal(alg, decomp)
    return build(alg, DElem(w, alg.zero()), lam, k)


def symmetric_decompose(theta, base):
    """Express a base-symmetric unit as gamma * base(gamma).

    The entries of gamma come from a six-case table over the
    lower/upper/fixed split; on fixed points the ring coordinate needs an
    exact square root, otherwise NotASquare lists the offenders.
    """
    alg = base.alg
    field = alg.field
    if theta.alg != alg:
        raise ContextMismatch("unit over a different context")
    if base.apply(theta) != theta:
        raise NotSymmetric("unit is not symmetric for the base involution")
    decomp = base.decomposition()
    f, i = theta.f, theta.i
    offenders = [x for x in decomp.fixed if not field.is_square(f[x, x])]
    if offenders:
        raise NotASquare(f"non-square ring diagonal at {offenders}", offenders)
    half = field.inv(field(2))
    side = decomp.side
    v_vals, j_vals = {}, {}
    for x, y in alg.pairs:
        sx, sy = side(x), side(y)
        if sx == -1 and sy == -1:
            v_vals[(x, y)] = field.one if x == y else field.zero
            j_vals[(x, y)] = field.zero
        elif sx == 1 and sy == 1:
            v_vals[(x, y)] = f[x, y]
            j_vals[(x, y)] = i[x, y]
        elif sx == -1 and sy == 1:
            v_vals[(x, y)] = field.mul(f[x, y], half)
            j_vals[(x, y)] = field.mul(i[x, y], half)
        elif sx == -1 and sy == 0:
            v_vals[(x, y)] = field.zero
            j_vals[(x, y)] = field.zero
        elif sx == 0 and sy == 1:
            v_vals[(x, y)] = f[x, y]
            j_vals[(x, y)] = i[x, y]
        else:  # x == y in the fixed part
            root = field.sqrt(f[x, x])
            v_vals[(x, y)] = root
            j_vals[(x, y)] = field.mul(i[x, x],
                                       field.inv(field.mul(field(2), root)))
    gamma = DElem(alg.element(v_vals), alg.element(j_vals))
    if gamma * base.apply(gamma) != theta:
        raise NotSymmetric("table construction failed to factor the unit")
    return gamma


# -- recognition -------------------------------------------------------------


def _validate_ring_involution(raw):
    alg = raw.alg
    if raw.apply(d_one(alg)) != d_one(alg):
        raise NotAnInvolution("map does not fix the unity")
    basis = d_basis(alg)
    images = [raw.apply(b) for b in basis]
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            if raw.apply(bi * bj) != images[j] * images[i]:
                raise NotAnInvolution("map is not anti-multiplicative")
    for b, img in zip(basis, images):
        if raw.apply(img) != b:
            raise NotAnInvolution("map does not square to the identity")


def recognize(raw):
    """Factor a raw matrix ring involution into the normal form.

    Pipeline: validate, peel the ring-coordinate block and decompose it,
    divide out its lift, read the central scalar and the derivation from
    what remains, absorb everything into one conjugating unit, and check
    the recomposition exactly.
    """
    alg = raw.alg
    poset, field = alg.poset, alg.field
    require_classifiable(poset, field)
    b11, b12, b21, b22 = raw.blocks()
    if any(v != field.zero for col in b12 for v in col):
        raise UpperRightNonzero("bimodule-to-ring block must vanish")
    _validate_ring_involution(raw)
    phi11 = FiLinearMap(alg, b11)
    m11 = decompose(phi11, anti=True)
    inv_rows = invert_matrix(field, phi11.matrix_rows())
    phi11_inv = FiLinearMap(
        alg, [[row[j] for row in inv_rows] for j in range(alg.npairs)])
    m11_inv = decompose(phi11_inv, anti=True)
    remainder = lift_morphism(m11_inv).compose(raw)
    # remainder must be [[id, 0], [g D, g .]]
    g = remainder.apply(DElem(alg.zero(), alg.delta())).i
    if not (g.is_unit() and alg.is_central(g)):
        raise NotAnInvolution("residual bimodule action is not central")
    x0 = poset.elements[0]
    k = g[x0, x0]
    g_inv = g.inverse()

    def derivation_action(f):
        return g_inv * remainder.apply(DElem(f, alg.zero())).i

    der_map = FiLinearMap.from_function(alg, derivation_action)
    if not leibniz_check(alg, der_map):
        raise NotAnInvolution("residual lower-left block is not a derivation")
    spec_d = split_raw_derivation(der_map)
    diag_witness = additive_is_inner(alg, spec_d.tau)
    assert diag_witness is not None, "hypothesis check admitted a bad poset"
    j = spec_d.inner + diag_witness
    eta = multiplicative_is_inner(alg, m11.sigma)
    assert eta is not None, "hypothesis check admitted a bad poset"
    m = m11.u * alg.diagonal(eta)
    lam = m11.posetmap
    rho = FiaMorphism.induced(alg, lam)
    theta = DElem(m, (m * rho.apply(j)).scale(k))
    spec = build(alg, theta, lam, k)
    if spec.to_linear() != raw:
        raise NotAnInvolution("normal form does not reproduce the input")
    return spec


def involution_from_json(alg, obj):
    lam = PosetMap(alg.poset, alg.poset,
                   dict(obj["lambda"]), anti=True)
    theta = d_from_json(alg, obj["theta"])
    return build(alg, theta, lam, alg.field.parse(str(obj["k"])))


# -- equivalence -------------------------------------------------------------


class Verdict:
    """Outcome of an equivalence query: either a verified witness or the
    name of a distinguishing invariant."""

    def __init__(self, equivalent, conjugator=None, distinguisher=None,
                 alpha=None, k=None):
        self.equivalent = equivalent
        self.conjugator = conjugator
        self.distinguisher = distinguisher
        self.alpha = alpha
        self.k = k

    def to_json(self):
        out = {"equivalent": self.equivalent}
        if self.equivalent:
            witness = {"kind": "inner" if self.alpha is None else "general",
                       "conjugator": self.conjugator.to_json()}
            if self.alpha is not None:
                witness["alpha"] = self.alpha.to_json()
                witness["k"] = str(self.k)
            out["witness"] = witness
        else:
            out["distinguisher"] = self.distinguisher
        return out

    def __repr__(self):
        if self.equivalent:
            return "Verdict(equivalent)"
        return f"Verdict(not equivalent: {self.distinguisher})"


def _check_same_context(s1, s2):
    if s1.alg != s2.alg:
        raise ContextMismatch("involutions over different contexts")


def _reduce_with_witness(spec):
    """(base, gamma) with conj(gamma^-1) o spec = base o conj(gamma^-1),
    where base is the canonical representative of spec's inner class."""
    alg = spec.alg
    decomp = spec.decomposition()
    theta_sym, k0 = spec.symmetric_form()
    if decomp.fixed:
        eps = {x: theta_sym.f[x, x] for x in decomp.fixed}
        base = rho_eps(alg, spec.lam, eps, spec.k)
        small = theta_sym * base.theta.inverse()
        gamma = symmetric_decompose(small, base)
        return base, gamma
    if k0 == alg.field.one:
        base = base_involution(alg, spec.lam, spec.k)
        gamma = symmetric_decompose(theta_sym, base)
        return base, gamma
    base = sigma_lambda(alg, spec.lam, spec.k)
    skew_adjusted = theta_sym * base.theta
    gamma = symmetric_decompose(skew_adjusted, base)
    return base, gamma


def _verify_intertwiner(s1, s2, conjugator):
    psi = inner_auto(conjugator)
    return psi.compose(s1.to_linear()) == s2.to_linear().compose(psi)


def equivalent_inner(s1, s2):
    """Decide inner equivalence; emit a verified conjugator or name the
    distinguishing invariant ("lambda", "sign" or "chi")."""
    _check_same_context(s1, s2)
    alg = s1.alg
    require_classifiable(alg.poset, alg.field)
    if s1.lam != s2.lam:
        return Verdict(False, distinguisher="lambda")
    if s1.k != s2.k:
        return Verdict(False, distinguisher="sign")
    inv1, inv2 = s1.invariant(), s2.invariant()
    if not inv1.same_inner_class(inv2):
        return Verdict(False, distinguisher="chi")
    base1, gamma1 = _reduce_with_witness(s1)
    base2, gamma2 = _reduce_with_witness(s2)
    if base1.theta == base2.theta:
        shift = d_one(alg)
    else:
        shift = _shift_conjugator(s1, base1, base2)
    conjugator = gamma2 * shift * gamma1.inverse()
    assert _verify_intertwiner(s1, s2, conjugator), \
        "constructed witness fails to intertwine"
    return Verdict(True, conjugator=conjugator)


def _shift_conjugator(spec, base1, base2):
    """A unit v with conj(v) o base1 = base2 o conj(v), built from a global
    square-class shift between the two fixed-point scalings."""
    alg = spec.alg
    field = alg.field
    decomp = spec.decomposition()
    eps1 = {x: base1.theta.f[x, x] for x in decomp.fixed}
    eps2 = {x: base2.theta.f[x, x] for x in decomp.fixed}
    x0 = decomp.fixed[0]
    g0 = field.div(eps2[x0], eps1[x0])
    diag = {}
    for x in decomp.lower:
        diag[x] = g0
    for x in decomp.upper:
        diag[x] = field.one
    for x in decomp.fixed:
        val = field.mul(g0, field.div(eps2[x], eps1[x]))
        root = field.sqrt(val)
        assert root is not None, "shift ratio must be a square"
        diag[x] = root
    return DElem(alg.diagonal(diag), alg.zero())


def equivalent(s1, s2):
    """Decide equivalence under all ring automorphisms: the signs must
    agree and some poset automorphism must carry one induced involution to
    the other with matching square-class data."""
    _check_same_context(s1, s2)
    alg = s1.alg
    require_classifiable(alg.poset, alg.field)
    if s1.k != s2.k:
        return Verdict(False, distinguisher="sign")
    carriers = [a for a in alg.poset.automorphisms()
                if a.compose(s2.lam).compose(a.inverse()) == s1.lam]
    if not carriers:
        return Verdict(False, distinguisher="lambda")
    for alpha in carriers:
        relabel = FiaMorphism.induced(alg, alpha)
        moved = DElem(relabel.apply(s2.theta.f), relabel.apply(s2.theta.i))
        conjugated = InvolutionSpec(alg, moved, s1.lam, s2.k, _validated=True)
        inner = equivalent_inner(s1, conjugated)
        if inner.equivalent:
            lifted = lift_morphism(relabel)
            lifted_inv = lift_morphism(FiaMorphism.induced(alg, alpha.inverse()))
            assert lifted.compose(s2.to_linear()).compose(lifted_inv) == \
                conjugated.to_linear(), "relabel conjugation mismatch"
            return Verdict(True, conjugator=inner.conjugator,
                           alpha=alpha, k=alg.field.one)
    return Verdict(False, distinguisher="chi")


# -- classification ----------------------------------------------------------


class Classification:
    """Classification outcome: representatives with their invariants, or a
    finitely-described family when the square-class group is infinite."""

    def __init__(self, poset, field, lam, fixed, representatives, count,
                 general, family=None):
        self.poset = poset
        self.field = field
        self.lam = lam
        self.fixed = tuple(fixed)
        self.representatives = representatives
        self.count = count
        self.general = general
        self.family = family

    @property
    def infinite(self):
        return self.count is None

    def invariants(self):
        if self.representatives is None:
            return None
        return [s.invariant() for s in self.representatives]

    def to_json(self):
        out = {
            "poset": self.poset.to_json(),
            "field": getattr(self.field, "name", "Q"),
            "lambda": self.lam.to_json(),
            "fixed_points": [str(x) for x in self.fixed],
            "mode": "general" if self.general else "inner",
            "count": self.count if self.count is not None else "infinite",
        }
        if self.representatives is not None:
            out["representatives"] = [s.to_json() for s in self.representatives]
            out["invariants"] = [i.to_json() for i in self.invariants()]
        if self.family is not None:
            out["family"] = self.family
        return out


def _chi_orbit_fold(poset, lam, fixed, tuples):
    """Fold canonical square-class tuples by the automorphisms commuting
    with the involution; keeps the lexicographically first of each orbit."""
    normalizer = [a for a in poset.automorphisms()
                  if a.compose(lam) == lam.compose(a)]
    index = {x: i for i, x in enumerate(fixed)}

    def act(alpha, tup):
        moved = {x: tup[index[alpha.inverse()(x)]] for x in fixed}
        head = moved[fixed[0]]
        return tuple(moved[x] * head.inverse() for x in fixed)

    keep = []
    seen = set()
    for tup in tuples:
        if tup in seen:
            continue
        orbit = {act(a, tup) for a in normalizer}
        seen |= orbit
        keep.append(tup)
    return keep


def classify(poset, lam, field, general=False):
    """Representatives of the involutions inducing the given poset
    involution, up to inner (default) or general equivalence."""
    require_classifiable(poset, field)
    alg = IncidenceAlgebra(poset, field)
    decomp = lambda_decomposition(poset, lam)
    fixed = decomp.fixed
    if not fixed:
        reps = [base_involution(alg, lam, 1),
                base_involution(alg, lam, -1),
                sigma_lambda(alg, lam, 1),
                sigma_lambda(alg, lam, -1)]
        return Classification(poset, field, lam, fixed, reps, 4, general)
    if len(fixed) == 1:
        reps = [base_involution(alg, lam, 1), base_involution(alg, lam, -1)]
        return Classification(poset, field, lam, fixed, reps, 2, general)
    if field.square_class_count is None:
        family = {
            "shape": "rho_eps with sign +1 or -1",
            "eps": "signed squarefree integers on the fixed points, "
                   "first one normalized to 1, modulo one global shift",
            "fixed_points": [str(x) for x in fixed],
        }
        if general:
            family["general"] = ("tuples further identified under poset "
                                 "automorphisms commuting with the involution")
        return Classification(poset, field, lam, fixed, None, None, general,
                              family=family)
    reps_scalars = field.square_class_reps()
    import itertools
    tuples = [(field.square_class(field.one),) + tuple(
        field.square_class(v) for v in rest)
        for rest in itertools.product(reps_scalars, repeat=len(fixed) - 1)]
    if general:
        tuples = _chi_orbit_fold(poset, lam, fixed, tuples)
    reps = []
    for tup in tuples:
        eps = {}
        for x, cls in zip(fixed, tup):
            eps[x] = field.one if cls.is_identity else reps_scalars[-1]
        for k in (1, -1):
            reps.append(rho_eps(alg, lam, eps, k))
    count = len(reps)
    if not general:
        expected = 2 * field.square_class_count ** (len(fixed) - 1)
        assert count == expected, "representative count disagrees with theory"
    return Classification(poset, field, lam, fixed, reps, count, general)
