import random

import pytest

from incalg.errors import (
    BadSign, Char2Unsupported, FixedPointsPresent, HypothesisFailed,
    NotASquare, NotConnected, NotInvolutive, NotSymmetric, UpperRightNonzero,
    ZeroEpsilon,
)
from incalg.fia import IncidenceAlgebra
from incalg.fields import QQ, PrimeField
from incalg.idealization import (
    DElem, DLinearMap, central_pair, d_one, inner_auto, random_d_unit,
)
from incalg.involutions import (
    Classification, InvolutionSpec, base_involution, build, check_hypotheses,
    classify, equivalent, equivalent_inner, involution_from_json, recognize,
    rho_eps, sigma_lambda, symmetric_decompose,
)
from incalg.posets import lambda_decomposition

F3 = PrimeField(3)
F5 = PrimeField(5)


def pair_orbits(alg, lam):
    seen, orbits = set(), []
    for x, y in alg.pairs:
        if (x, y) in seen:
            continue
        mirror = (lam(y), lam(x))
        seen.add((x, y))
        seen.add(mirror)
        orbits.append(((x, y), mirror))
    return orbits


def random_symmetric_theta(alg, lam, k, rng, fixed_diag=None):
    """Random unit symmetric for the base involution with relabel lam and
    sign k; optional override of the ring diagonal at fixed points."""
    field = alg.field
    fixed_diag = fixed_diag or {}
    f_vals, i_vals = {}, {}
    for p, mirror in pair_orbits(alg, lam):
        x, y = p
        if x == y and x == lam(x) and x in fixed_diag:
            v = field(fixed_diag[x])
        elif x == y:
            v = field.random_nonzero(rng)
        else:
            v = field.random(rng)
        f_vals[p] = v
        f_vals[mirror] = v
        if p == mirror:
            if k == field.one:
                i_vals[p] = field.random(rng)
            else:
                i_vals[p] = field.zero
        else:
            w = field.random(rng)
            i_vals[mirror] = w
            i_vals[p] = field.mul(field(k), w)
    return DElem(alg.element(f_vals), alg.element(i_vals))


def swap_involution(poset):
    return poset.involutions()[0]


def diamond_flip(diamond):
    return next(m for m in diamond.involutions()
                if m.mapping == {"0": "1", "1": "0", "a": "a", "b": "b"})


def test_base_involution_round_trip(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    rho = base_involution(alg, lam, 1)
    assert rho.sign == 1
    assert rho.induced == lam
    m = rho.to_linear()
    assert m.is_involution()
    assert rho.apply(d_one(alg)) == d_one(alg)


def test_sigma_lambda_flips_its_unit(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    sig = sigma_lambda(alg, lam, 1)
    omega = sig.theta
    assert sig.apply(omega) == -omega
    assert sig.to_linear().is_involution()
    assert omega * omega == d_one(alg)


def test_sigma_needs_fixed_point_free(chain3):
    alg = IncidenceAlgebra(chain3, F5)
    with pytest.raises(FixedPointsPresent):
        sigma_lambda(alg, swap_involution(chain3), 1)


def test_build_accepts_symmetric_conjugator(chain2):
    alg = IncidenceAlgebra(chain2, F5)
    lam = swap_involution(chain2)
    theta = DElem(alg.delta() + alg.e("a", "b"), alg.zero())
    spec = build(alg, theta, lam, 1)
    assert spec.to_linear().is_involution()


def test_build_rejects_non_involutive_unit(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    theta = DElem(alg.delta(), alg.e("a", "b"))
    with pytest.raises(NotInvolutive):
        build(alg, theta, lam, -1)


def test_build_accepts_diagonal_bimodule_twist(chain2):
    # [delta; e_a] against the negative sign: the base image is [delta; -e_b]
    # and the ratio [delta; e_a + e_b] is central
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    spec = build(alg, DElem(alg.delta(), alg.e("a", "a")), lam, -1)
    assert spec.to_linear().is_involution()
    assert spec.sign == alg.field.neg(1)


def test_build_entry_guards(chain2, two_chains):
    alg2 = IncidenceAlgebra(chain2, PrimeField(2))
    lam2 = swap_involution(chain2)
    with pytest.raises(Char2Unsupported):
        build(alg2, d_one(alg2), lam2, 1)
    alg5 = IncidenceAlgebra(chain2, F5)
    with pytest.raises(BadSign):
        build(alg5, d_one(alg5), swap_involution(chain2), 2)
    algd = IncidenceAlgebra(two_chains, F5)
    lam_d = two_chains.involutions()[0]
    with pytest.raises(NotConnected):
        build(algd, d_one(algd), lam_d, 1)


def test_sign_and_central_action(chain3, diamond):
    rng = random.Random(0)
    for poset in (chain3, diamond):
        for field in (F5, QQ):
            alg = IncidenceAlgebra(poset, field)
            lam = poset.involutions()[0]
            for k in (1, -1):
                spec = base_involution(alg, lam, k)
                assert spec.sign == field(k)
                for _ in range(10):
                    k1, k2 = field.random(rng), field.random(rng)
                    got = spec.apply(central_pair(alg, k1, k2))
                    assert got == central_pair(alg, k1, field.mul(field(k), k2))


def test_rho_eps_trivial_cases(chain2, diamond):
    alg = IncidenceAlgebra(chain2, F5)
    lam = swap_involution(chain2)
    spec = rho_eps(alg, lam, {}, 1)
    assert spec.theta == d_one(alg)  # no fixed points: scaling collapses
    algd = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    ones = rho_eps(algd, flip, {"a": 1, "b": 1}, 1)
    assert ones.theta == d_one(algd)
    with pytest.raises(ZeroEpsilon):
        rho_eps(algd, flip, {"a": 0, "b": 1}, 1)


def test_involution_spec_json_round_trip(diamond):
    alg = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    spec = rho_eps(alg, flip, {"a": 2, "b": 3}, -1)
    again = involution_from_json(alg, spec.to_json())
    assert again.to_linear() == spec.to_linear()


def test_symmetric_decompose_identity_target(diamond):
    alg = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    base = rho_eps(alg, flip, {"a": 1, "b": 1}, 1)
    gamma = symmetric_decompose(d_one(alg), base)
    assert gamma * base.apply(gamma) == d_one(alg)


def test_symmetric_decompose_random(diamond):
    rng = random.Random(1)
    alg = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    squares = [1, 4]
    for k in (1, -1):
        base = base_involution(alg, flip, k)
        for _ in range(25):
            theta = random_symmetric_theta(
                alg, flip, alg.field(k), rng,
                fixed_diag={"a": rng.choice(squares), "b": rng.choice(squares)})
            if not theta.is_unit():
                continue
            assert base.apply(theta) == theta
            gamma = symmetric_decompose(theta, base)
            assert gamma * base.apply(gamma) == theta


def test_symmetric_decompose_non_square_rejected(diamond):
    rng = random.Random(2)
    alg = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    base = base_involution(alg, flip, 1)
    hits = 0
    for _ in range(25):
        theta = random_symmetric_theta(alg, flip, alg.field.one, rng,
                                       fixed_diag={"a": 2, "b": 1})
        if not theta.is_unit():
            continue
        with pytest.raises(NotASquare) as err:
            symmetric_decompose(theta, base)
        assert "a" in err.value.args[1]
        hits += 1
    assert hits > 10


def test_symmetric_decompose_requires_symmetry(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    base = base_involution(alg, lam, 1)
    skew = DElem(alg.delta() + alg.e("a", "b"), alg.zero())
    # adjust: delta + e_ab is symmetric, so twist the bimodule part instead
    skew = DElem(alg.delta(), alg.e("a", "a") - alg.e("b", "b"))
    with pytest.raises(NotSymmetric):
        symmetric_decompose(skew, base)


def test_recognize_base(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    raw = base_involution(alg, lam, 1).to_linear()
    spec = recognize(raw)
    assert spec.lam == lam
    assert spec.k == alg.field.one
    assert spec.theta.is_central()
    assert spec.to_linear() == raw


def test_recognize_twisted(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    built = build(alg, DElem(alg.delta(), alg.e("a", "a")), lam, -1)
    spec = recognize(built.to_linear())
    assert spec.k == alg.field.neg(1)
    assert spec.lam == lam
    assert spec.to_linear() == built.to_linear()


def test_recognize_random_round_trip(diamond, chain3):
    rng = random.Random(3)
    for poset in (diamond, chain3):
        alg = IncidenceAlgebra(poset, F5)
        for lam in poset.involutions():
            for k in (1, -1):
                for _ in range(5):
                    theta = random_symmetric_theta(alg, lam, alg.field(k), rng)
                    if not theta.is_unit():
                        continue
                    spec = build(alg, theta, lam, k)
                    got = recognize(spec.to_linear())
                    assert got.to_linear() == spec.to_linear()
                    assert got.lam == lam and got.k == alg.field(k)


def test_recognize_rejects_upper_right_block(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    good = base_involution(alg, lam, 1).to_linear()
    cols = [list(c) for c in good.cols]
    cols[alg.npairs][0] = 1  # bimodule basis vector leaks into the ring block
    with pytest.raises(UpperRightNonzero):
        recognize(DLinearMap(alg, cols))


def test_recognize_rejects_non_involution(chain2):
    from incalg.errors import NotAnInvolution
    alg = IncidenceAlgebra(chain2, F3)
    with pytest.raises(NotAnInvolution):
        recognize(DLinearMap.identity(alg))  # multiplicative, not anti


def test_hypothesis_gate(crown):
    alg = IncidenceAlgebra(crown, F5)
    lam = crown.involutions()[0]
    with pytest.raises(HypothesisFailed):
        classify(crown, lam, F5)
    report = check_hypotheses(crown, F5)
    assert report == {"mult_subset_inn": False, "der_equals_ider": False}
    assert check_hypotheses(crown, PrimeField(2)) == {
        "mult_subset_inn": True, "der_equals_ider": False}


def test_invariants_well_defined_under_central_shift(diamond):
    rng = random.Random(4)
    alg = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    for k in (1, -1):
        theta = random_symmetric_theta(alg, flip, alg.field(k), rng,
                                       fixed_diag={"a": 4, "b": 2})
        if not theta.is_unit():
            continue
        spec = build(alg, theta, flip, k)
        for k1, k2 in ((2, 0), (1, 3), (4, 4)):
            shifted = build(alg, central_pair(alg, k1, k2) * theta, flip, k)
            a, b = spec.invariant(), shifted.invariant()
            assert a.same_inner_class(b)
            assert a.sign == b.sign and a.lam == b.lam


def test_plus_minus_theta_property(chain2):
    # for an involution written as a twist of a base one, the base image of
    # the twisting unit is the unit times a central pair with ring part +-1
    rng = random.Random(5)
    alg = IncidenceAlgebra(chain2, F5)
    lam = swap_involution(chain2)
    for k in (1, -1):
        base = base_involution(alg, lam, k)
        for _ in range(20):
            gamma = random_d_unit(alg, rng)
            theta = gamma * base.apply(gamma)
            c = central_pair(alg, rng.choice([1, 2, 3, 4]), rng.randrange(5))
            spec = build(alg, c * theta, lam, k)
            k0, k1 = spec.central_ratio()
            assert alg.field.mul(k0, k0) == alg.field.one
            if k == 1:
                assert k1 == alg.field.zero
            sym, k0b = spec.symmetric_form()
            assert spec.base_apply(sym) == sym.scale(k0b)


def test_equivalent_inner_sign_distinguishes(chain3):
    alg = IncidenceAlgebra(chain3, F5)
    lam = swap_involution(chain3)
    v = equivalent_inner(base_involution(alg, lam, 1),
                         base_involution(alg, lam, -1))
    assert not v.equivalent and v.distinguisher == "sign"


def test_equivalent_inner_lambda_distinguishes(diamond):
    alg = IncidenceAlgebra(diamond, F5)
    lams = diamond.involutions()
    v = equivalent_inner(base_involution(alg, lams[0], 1),
                         base_involution(alg, lams[1], 1))
    assert not v.equivalent and v.distinguisher == "lambda"


def test_equivalent_inner_chi_shift(diamond):
    alg = IncidenceAlgebra(diamond, F3)
    flip = diamond_flip(diamond)
    s1 = rho_eps(alg, flip, {"a": 1, "b": 1}, 1)
    s2 = rho_eps(alg, flip, {"a": 2, "b": 2}, 1)
    v = equivalent_inner(s1, s2)
    assert v.equivalent
    assert v.conjugator is not None
    psi = inner_auto(v.conjugator)
    assert psi.compose(s1.to_linear()) == s2.to_linear().compose(psi)


def test_equivalent_inner_chi_difference(diamond):
    alg = IncidenceAlgebra(diamond, F3)
    flip = diamond_flip(diamond)
    s1 = rho_eps(alg, flip, {"a": 1, "b": 1}, 1)
    s2 = rho_eps(alg, flip, {"a": 1, "b": 2}, 1)
    v = equivalent_inner(s1, s2)
    assert not v.equivalent and v.distinguisher == "chi"


def test_equivalent_inner_rho_vs_sigma(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    v = equivalent_inner(base_involution(alg, lam, 1), sigma_lambda(alg, lam, 1))
    assert not v.equivalent and v.distinguisher == "chi"


def test_equivalent_inner_witness_random(diamond, chain2, chain3):
    rng = random.Random(6)
    for poset in (chain2, chain3, diamond):
        alg = IncidenceAlgebra(poset, F5)
        for lam in poset.involutions():
            for k in (1, -1):
                base = base_involution(alg, lam, k)
                for _ in range(6):
                    gamma = random_d_unit(alg, rng)
                    theta = gamma * base.apply(gamma)
                    spec = build(alg, theta, lam, k)
                    v = equivalent_inner(spec, base)
                    assert v.equivalent
                    psi = inner_auto(v.conjugator)
                    assert psi.compose(spec.to_linear()) == \
                        base.to_linear().compose(psi)


def test_equivalent_inner_sigma_branch(chain2):
    rng = random.Random(7)
    alg = IncidenceAlgebra(chain2, F5)
    lam = swap_involution(chain2)
    for k in (1, -1):
        sig = sigma_lambda(alg, lam, k)
        for _ in range(10):
            gamma = random_d_unit(alg, rng)
            spec = build(alg, gamma * sig.apply(gamma) * sig.theta, lam, k)
            v = equivalent_inner(spec, sig)
            assert v.equivalent
            psi = inner_auto(v.conjugator)
            assert psi.compose(spec.to_linear()) == \
                sig.to_linear().compose(psi)


def test_general_equivalence_by_relabeling(diamond):
    # over GF(3) the swapped scalings already differ by the constant
    # non-square shift, so they are even inner equivalent
    alg = IncidenceAlgebra(diamond, F3)
    flip = diamond_flip(diamond)
    s1 = rho_eps(alg, flip, {"a": 1, "b": 2}, 1)
    s2 = rho_eps(alg, flip, {"a": 2, "b": 1}, 1)
    assert equivalent_inner(s1, s2).equivalent
    v = equivalent(s1, s2)
    assert v.equivalent and v.k == alg.field.one


def test_general_equivalence_needs_relabeling_on_three_middles(wide_diamond):
    alg = IncidenceAlgebra(wide_diamond, F3)
    flip = next(m for m in wide_diamond.involutions()
                if all(m.mapping[x] == x for x in "abc"))
    s1 = rho_eps(alg, flip, {"a": 1, "b": 1, "c": 2}, 1)
    s2 = rho_eps(alg, flip, {"a": 2, "b": 1, "c": 1}, 1)
    assert not equivalent_inner(s1, s2).equivalent
    v = equivalent(s1, s2)
    assert v.equivalent
    assert v.alpha is not None and not v.alpha.is_identity()
    assert v.k == alg.field.one
    psi = inner_auto(v.conjugator)
    from incalg.morphisms import FiaMorphism
    from incalg.idealization import lift_morphism
    lifted = lift_morphism(FiaMorphism.induced(alg, v.alpha))
    lifted_inv = lift_morphism(FiaMorphism.induced(alg, v.alpha.inverse()))
    target = lifted.compose(s2.to_linear()).compose(lifted_inv)
    assert psi.compose(s1.to_linear()) == target.compose(psi)


def test_general_equivalence_sign_still_distinguishes(chain2):
    alg = IncidenceAlgebra(chain2, F3)
    lam = swap_involution(chain2)
    v = equivalent(base_involution(alg, lam, 1), sigma_lambda(alg, lam, -1))
    assert not v.equivalent and v.distinguisher == "sign"
    v2 = equivalent(base_involution(alg, lam, 1), sigma_lambda(alg, lam, 1))
    assert not v2.equivalent and v2.distinguisher == "chi"


def test_general_equivalence_conjugate_specs(diamond):
    rng = random.Random(8)
    alg = IncidenceAlgebra(diamond, F5)
    flip = diamond_flip(diamond)
    spec = rho_eps(alg, flip, {"a": 2, "b": 3}, -1)
    for alpha in diamond.automorphisms():
        from incalg.morphisms import FiaMorphism
        relabel = FiaMorphism.induced(alg, alpha)
        moved = DElem(relabel.apply(spec.theta.f), relabel.apply(spec.theta.i))
        conj = build(alg, moved, flip, -1)
        assert equivalent(spec, conj).equivalent


def test_classify_chain2_four_classes(chain2):
    lam = swap_involution(chain2)
    res = classify(chain2, lam, F3)
    assert res.count == 4
    kinds = {(inv.kind, str(inv.sign)) for inv in res.invariants()}
    assert kinds == {("plain", "1"), ("plain", "2"),
                     ("skew", "1"), ("skew", "2")}
    for i, a in enumerate(res.representatives):
        for b in res.representatives[i + 1:]:
            assert not equivalent_inner(a, b).equivalent
            assert not equivalent(a, b).equivalent


def test_classify_chain3(chain3):
    lam = swap_involution(chain3)
    for field in (F5, F3):
        res = classify(chain3, lam, field)
        assert res.count == 2
        a, b = res.representatives
        assert not equivalent_inner(a, b).equivalent


def test_classify_diamond(diamond):
    flip = diamond_flip(diamond)
    for field in (F3, F5):
        res = classify(diamond, flip, field)
        assert res.count == 4
        reps = res.representatives
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                assert not equivalent_inner(a, b).equivalent


def test_classify_diamond_fixed_point_free_involution(diamond):
    lam = next(m for m in diamond.involutions()
               if m.mapping == {"0": "1", "1": "0", "a": "b", "b": "a"})
    res = classify(diamond, lam, F3)
    assert res.count == 4  # plain/skew times sign


def test_classify_general_folds_wide_diamond(wide_diamond):
    flip = next(m for m in wide_diamond.involutions()
                if all(m.mapping[x] == x for x in "abc"))
    inner = classify(wide_diamond, flip, F3)
    assert inner.count == 2 * 2 ** (3 - 1)  # 8 inner classes
    folded = classify(wide_diamond, flip, F3, general=True)
    assert folded.count == 4  # middles are interchangeable
    reps = folded.representatives
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert not equivalent(a, b).equivalent


def test_classify_rational_schema(diamond):
    flip = diamond_flip(diamond)
    res = classify(diamond, flip, QQ)
    assert res.infinite and res.representatives is None
    assert res.family is not None
    assert res.to_json()["count"] == "infinite"
    # one fixed point stays finite over the rationals
    from conftest import chain
    c3 = chain(3)
    res3 = classify(c3, swap_involution(c3), QQ)
    assert res3.count == 2


def test_classification_counts_match_formula(diamond, chain3):
    # two fixed points: 2 * |S_K|; one fixed point: 2
    assert classify(diamond, diamond_flip(diamond), F5).count == 4
    assert classify(chain3, swap_involution(chain3), F5).count == 2
    f13 = PrimeField(13)
    assert classify(diamond, diamond_flip(diamond), f13).count == 4


def test_classify_representatives_are_involutions(diamond):
    flip = diamond_flip(diamond)
    for spec in classify(diamond, flip, F3).representatives:
        assert spec.to_linear().is_involution()


def test_equivalent_inner_over_rationals_with_shift(diamond):
    # scalings 2,3 and 10,15 differ by the global class of 5; the witness
    # needs exact rational square roots (5*10/2 = 5*15/3 = 25)
    alg = IncidenceAlgebra(diamond, QQ)
    flip = diamond_flip(diamond)
    s1 = rho_eps(alg, flip, {"a": QQ(2), "b": QQ(3)}, -1)
    s2 = rho_eps(alg, flip, {"a": QQ(10), "b": QQ(15)}, -1)
    v = equivalent_inner(s1, s2)
    assert v.equivalent
    psi = inner_auto(v.conjugator)
    assert psi.compose(s1.to_linear()) == s2.to_linear().compose(psi)
    s3 = rho_eps(alg, flip, {"a": QQ(2), "b": QQ(5)}, -1)
    v = equivalent_inner(s1, s3)
    assert not v.equivalent and v.distinguisher == "chi"


def test_classify_rational_no_fixed_points(chain2):
    lam = swap_involution(chain2)
    res = classify(chain2, lam, QQ)
    assert res.count == 4
    for i, a in enumerate(res.representatives):
        for b in res.representatives[i + 1:]:
            assert not equivalent_inner(a, b).equivalent


def test_sigma_branch_over_rationals(chain2):
    rng = random.Random(40)
    alg = IncidenceAlgebra(chain2, QQ)
    lam = swap_involution(chain2)
    sig = sigma_lambda(alg, lam, -1)
    for _ in range(5):
        gamma = random_d_unit(alg, rng)
        spec = build(alg, gamma * sig.apply(gamma) * sig.theta, lam, -1)
        v = equivalent_inner(spec, sig)
        assert v.equivalent
        psi = inner_auto(v.conjugator)
        assert psi.compose(spec.to_linear()) == sig.to_linear().compose(psi)
