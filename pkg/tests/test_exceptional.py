from exlie.exceptional import (algebra, bracket, E8El, e7_operator_basis,
                               epsilon_fixed, jordan_operator_basis,
                               killing_proportionality, quaternion_killing,
                               quaternion_killing_fn, real_form_qdim,
                               centralizer, tau_lam_omega, exp_ad,
                               exp_image_of_one_minus, ad_power_annihilates,
                               r_cross_r_apply, cross_square_annihilates,
                               null_locus_conditions, b4_closed, b8_closed,
                               cartan_elements, cartan_gram_closed,
                               cartan_gram_brute, fixed_subalgebra,
                               subbasis_from_kernel)
from exlie.freudenthal import FVec, E7Op, P_QUAT, skew_p, cross_op
from exlie.jordan import Jordan, QUAT, OCT
from exlie.scalars import qi, Q, RationalSampler
from exlie import linalg

import pytest


def ALG():
    return algebra("quaternion")


def rnd_element(rng, alg, terms=4):
    return alg._combine({rng.randint(0, alg.dim - 1): rng.qi(nonzero=True)
                         for _ in range(terms)})


def test_bracket_grading_examples():
    alg = ALG()
    ot, om, osup = alg.one_tilde(), alg.one_minus(), alg.one_sup()
    assert bracket(ot, om) == om.scale(-2)
    assert bracket(ot, osup) == osup.scale(2)
    # the six-part display makes [s-slot, t-slot] land on the grading element
    assert bracket(osup, om) == ot
    assert bracket(om, osup) == ot.scale(-1)


def test_bracket_antisymmetry_random():
    alg = ALG()
    rng = RationalSampler(3)
    for _ in range(10):
        a, b = rnd_element(rng, alg), rnd_element(rng, alg)
        assert bracket(a, b) == bracket(b, a).scale(-1)
        assert not bracket(a, a)


def test_ad_of_grading_element_is_diagonal():
    alg = ALG()
    ad = alg.basis.ad_matrix(alg.basis.coordinatize(alg.one_tilde()))
    off = alg._offsets
    expect = {}
    for k in range(alg.pspace.dim):
        expect[off["P"] + k] = qi(1)
        expect[off["Q"] + k] = qi(-1)
    expect[off["s"]] = qi(2)
    expect[off["t"]] = qi(-2)
    for i in range(alg.dim):
        for j in range(alg.dim):
            v = ad.get(i, {}).get(j, qi(0))
            assert v == (expect.get(i, qi(0)) if i == j else qi(0))


def test_killing_values():
    alg = ALG()
    g = alg.basis.gram()
    ri = alg._offsets["r"]
    assert g[ri][ri] == qi(72)
    qk = quaternion_killing()
    assert qk.inner8(alg.one_tilde(), alg.one_tilde()) == qi(-8)
    e7b = e7_operator_basis("quaternion")
    nu = alg._offsets["nu"]
    assert e7b.gram()[nu][nu] == qi(Q(40, 3))
    assert qk.inner7(e7b.elements[nu], e7b.elements[nu]) == qi(Q(-8, 3))


def test_killing_proportionality_constants():
    assert killing_proportionality(7) == qi(-5)
    assert killing_proportionality(8) == qi(-9)


def test_fixed_dimensions():
    for level, dim in ((4, 21), (6, 35), (7, 66), (8, 133)):
        assert epsilon_fixed(level).dim == dim


def test_fixed_subalgebra_rejects_non_automorphism():
    base = jordan_operator_basis(4)

    def crooked(m):
        return m.scale(2)

    with pytest.raises(ValueError):
        fixed_subalgebra(base, [crooked], "broken")


def test_closed_killing_forms_on_cartans():
    for level in (4, 6):
        gc = cartan_gram_closed(level)
        gb = cartan_gram_brute(level)
        r = len(gc)
        assert all(gc[i][j] == gb[i][j] for i in range(r) for j in range(r))
    g4 = cartan_gram_closed(4)
    assert [[str(v) for v in row] for row in g4] == [
        ["18", "0", "0"], ["0", "18", "0"], ["0", "0", "36"]]


def test_centralizer():
    alg = ALG()
    cz = centralizer(alg.basis, alg.basis.coordinatize(alg.one_minus()))
    assert cz.dim == 99
    assert all(not (el.P or el.r or el.s) for el in cz.elements)
    whole = centralizer(alg.basis, {})
    assert whole.dim == alg.dim


def test_real_forms():
    assert real_form_qdim(7) == 66
    assert real_form_qdim(8) == 133
    alg = ALG()
    for b in alg.basis.elements[::10]:
        assert tau_lam_omega(tau_lam_omega(b)) == b


def test_coordinatize_rejects_outside_elements():
    f21 = epsilon_fixed(4)
    moving = jordan_operator_basis(4).elements[0]
    # find a derivation that is NOT epsilon-fixed
    found = None
    for m in jordan_operator_basis(4).elements:
        try:
            f21.coordinatize(m)
        except ValueError:
            found = m
            break
    assert found is not None


def test_cross_square_at_base_point():
    alg = ALG()
    om = alg.one_minus()
    kf = quaternion_killing_fn()
    assert cross_square_annihilates(alg, om, kf, qi("1/18"))
    assert cross_square_annihilates(alg, om, b8_closed, qi("1/30"))
    # (R x R) R = c B(R,R) R since [R,[R,R]] = 0
    rng = RationalSampler(5)
    R = rnd_element(rng, alg)
    got = r_cross_r_apply(R, R, kf, qi("1/18"))
    assert got == R.scale(qi("1/18") * kf(R, R))


def test_null_locus_conditions_examples():
    alg = ALG()
    conds = null_locus_conditions(alg.one_minus())
    assert all(conds)
    conds_t = null_locus_conditions(alg.one_tilde())
    assert conds_t[5] is False  # {P,Q} - 16(st + r^2) = -16 at the grading element


def test_exp_closed_form():
    alg = ALG()
    rng = RationalSampler(7)

    def rj():
        return Jordan.from_coords(QUAT, {rng.randint(0, 14): rng.qi()
                                         for _ in range(3)})

    om = alg.one_minus()
    for _ in range(5):
        P1 = FVec(alg.pspace, rj(), rj(), rng.qi(), rng.qi())
        s1 = rng.qi()
        G = E8El.p_part(P1).add(E8El.s_minus(alg.pspace), s1)
        assert exp_ad(G, om) == exp_image_of_one_minus(P1, s1)
        assert ad_power_annihilates(G, om, 5)
    # zero exponent fixes the target
    assert exp_ad(E8El.zero(alg.pspace), om) == om


def test_exp_non_nilpotent_raises():
    alg = ALG()
    with pytest.raises(ArithmeticError):
        exp_ad(alg.one_tilde(), alg.one_minus(), max_power=8)


def test_structure_constant_closure_error():
    alg = ALG()
    # the span of the two lowering elements is not closed under the bracket
    vecs = [{alg._offsets["s"]: qi(1)}, {alg._offsets["t"]: qi(1)}]
    sub = subbasis_from_kernel(alg.basis, vecs, "not-closed")
    with pytest.raises(ValueError):
        sub.structure_constants()
