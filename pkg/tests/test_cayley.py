from exlie.cayley import (Cayley, E, MUL_TABLE, epsilon_gamma, mat_eq,
                          mat_entry, mat_mul, mat_vec, identity_mat, phi_g2,
                          quaternion_automorphism, g_so8, so8_combo,
                          so8_pairs, triality_companions,
                          triality_identity_holds, is_skew)
from exlie.scalars import qi, Q, RationalSampler

import pytest

# the two automorphism matrices that anchor the multiplication convention
EPS1 = [
    [1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0], [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0, -1, 0]]
EPS2 = [
    [1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, -1, 0, 0, 0], [0, 0, 0, 0, 0, -1, 0, 0]]


def test_quaternion_relations():
    assert E[1] * E[2] == E[3]
    assert E[4] * E[4] == -E[0]
    assert E[1] * E[4] == E[5]
    for i in range(1, 8):
        assert E[i] * E[i] == -E[0]


def test_quaternion_subalgebra_closed():
    for i in range(4):
        for j in range(4):
            assert (E[i] * E[j]).is_quaternionic()


def test_alternativity_and_composition_on_basis():
    for i in range(8):
        for j in range(8):
            x, y = E[i], E[j]
            assert x * (x * y) == (x * x) * y
            assert (y * x) * x == y * (x * x)
            assert (x * y).norm_sq() == x.norm_sq() * y.norm_sq()


def test_composition_on_random_elements():
    rng = RationalSampler(2)
    for _ in range(25):
        x = Cayley([rng.qi() for _ in range(8)])
        y = Cayley([rng.qi() for _ in range(8)])
        assert (x * y).norm_sq() == x.norm_sq() * y.norm_sq()


def test_inner_product_orthonormal():
    for i in range(8):
        for j in range(8):
            assert E[i].inner(E[j]) == (qi(1) if i == j else qi(0))
    x = Cayley([qi(1), qi(0, 1)] + [qi(0)] * 6)
    y = Cayley([qi(1), qi(0, -1)] + [qi(0)] * 6)
    assert x.inner(y) == qi(2)


def test_conjugation():
    x = Cayley([qi(k) for k in range(8)])
    assert x.conj().c[0] == qi(0)
    assert x.conj().c[3] == qi(-3)
    assert x.conj().conj() == x


def test_epsilon_matrices_match_print():
    eps1, eps2, gamma = epsilon_gamma()
    for i in range(8):
        for j in range(8):
            assert mat_entry(eps1, i, j) == qi(EPS1[i][j])
            assert mat_entry(eps2, i, j) == qi(EPS2[i][j])
            assert mat_entry(gamma, i, j) == qi((1 if i < 4 else -1)
                                                if i == j else 0)


def test_epsilon_relations():
    eps1, eps2, gamma = epsilon_gamma()
    assert mat_eq(mat_mul(eps1, eps1), gamma)
    assert mat_eq(mat_mul(eps2, eps2), gamma)
    assert mat_eq(mat_mul(gamma, gamma), identity_mat())
    # the pair does not commute: their commutator is the gamma-twist
    assert not mat_eq(mat_mul(eps1, eps2), mat_mul(eps2, eps1))
    assert mat_eq(mat_mul(eps1, eps2), mat_mul(mat_mul(gamma, eps2), eps1))


def test_phi_g2_requires_unit_quaternions():
    with pytest.raises(ValueError):
        phi_g2(E[4], Cayley.scalar(1))
    with pytest.raises(ValueError):
        phi_g2(E[1].scale(2), Cayley.scalar(1))


def test_phi_g2_examples():
    one = Cayley.scalar(1)
    m = phi_g2(E[1], one)
    assert mat_vec(m, E[4]) == E[5]
    gamma = phi_g2(-one, one)
    for i in range(4):
        assert mat_vec(gamma, E[i]) == E[i]
        assert mat_vec(gamma, E[4 + i]) == -E[4 + i]


def test_quaternion_automorphism():
    rng = RationalSampler(9)
    for _ in range(5):
        x = Cayley([rng.qi() for _ in range(4)] + [qi(0)] * 4)
        n = x.norm_sq()
        if not n:
            continue
        q = (x * x).scale(qi(1) / n)
        fn = quaternion_automorphism(q)
        for i in range(4):
            for j in range(4):
                assert fn(E[i]) * fn(E[j]) == fn(E[i] * E[j])


def test_triality_solver():
    i_ = qi(0, 1)
    d1 = so8_combo({(0, 1): i_})
    t = triality_companions(d1)
    assert triality_identity_holds(*t)
    h = Q(1, 2)
    assert so8_pairs(t[1]) == {(0, 1): qi(0, -h), (2, 3): qi(0, -h),
                               (4, 5): qi(0, -h), (6, 7): qi(0, -h)}
    assert so8_pairs(t[2]) == {(0, 1): qi(0, -h), (2, 3): qi(0, h),
                               (4, 5): qi(0, h), (6, 7): qi(0, h)}


def test_triality_linear_and_identity_random():
    rng = RationalSampler(4)
    pairs = {(0, 3): rng.qi(), (1, 5): rng.qi(), (2, 6): rng.qi()}
    d1 = so8_combo(pairs)
    t = triality_companions(d1)
    assert triality_identity_holds(*t)
    # linearity: companions of 2*d1 are twice the companions
    d2x = triality_companions(so8_combo({k: v + v for k, v in pairs.items()}))
    assert mat_eq(d2x[1], mat_mul_scalar(t[1], 2))
    assert mat_eq(d2x[2], mat_mul_scalar(t[2], 2))


def mat_mul_scalar(m, c):
    c = qi(c)
    return tuple(tuple(c * m[j][i] for i in range(8)) for j in range(8))


def test_triality_skew_input_required():
    with pytest.raises(ValueError):
        triality_companions(identity_mat())
