from exlie.cayley import Cayley, E as CE, epsilon_gamma, so8_combo, \
    triality_companions
from exlie.jordan import (Jordan, Endo, OCT, QUAT, gram_diagonal,
                          derivation_basis, e6_basis, mult_operator,
                          lift_cayley_map, d_triple_endo, slot_generator)
from exlie.scalars import qi, Q, RationalSampler

import pytest


def E(k, space=QUAT):
    return Jordan.e_mat(space, k)


def F(k, x, space=QUAT):
    return Jordan.f_mat(space, k, x)


def random_jordan(rng, space=QUAT):
    return Jordan.from_coords(
        space, {rng.randint(0, space.dim - 1): rng.qi() for _ in range(4)})


def test_idempotents_and_annihilation():
    assert E(0).jmul(E(0)) == E(0)
    for x in (CE[0], CE[2]):
        assert not E(0).jmul(F(0, x))


def test_off_diagonal_square():
    got = F(0, CE[0]).jmul(F(0, CE[0]))
    assert got == E(1) + E(2)


def test_jmul_table_equals_matrix_product():
    rng = RationalSampler(13)
    for space in (QUAT, OCT):
        for _ in range(10):
            X, Y = random_jordan(rng, space), random_jordan(rng, space)
            assert X.jmul(Y) == X.jmul_matrix(Y)


def test_cross_examples():
    assert E(0).cross(E(1)) == E(2).scale(qi("1/2"))
    Emat = Jordan.identity(QUAT)
    assert Emat.cross(Emat) == Emat
    assert not E(0).cross(E(0))


def test_forms():
    Emat = Jordan.identity(QUAT)
    assert Emat.det() == qi(1)
    assert Jordan.diag(QUAT, 2, 3, 5).det() == qi(30)
    assert E(0).inner(E(0)) == qi(1)
    assert E(0).inner(E(1)) == qi(0)
    rng = RationalSampler(5)
    for _ in range(10):
        X, Y, Z = (random_jordan(rng) for _ in range(3))
        t = X.trilinear(Y, Z)
        assert t == Y.trilinear(X, Z) == Z.trilinear(Y, X)
        a = rng.qi()
        assert X.scale(a).det() == a ** 3 * X.det()


def test_jordan_identity_sampled():
    rng = RationalSampler(6)
    for _ in range(20):
        X, Y = random_jordan(rng), random_jordan(rng)
        XX = X.jmul(X)
        assert X.jmul(Y).jmul(XX) == X.jmul(Y.jmul(XX))


def test_inner_symmetric_via_trace():
    rng = RationalSampler(8)
    for _ in range(10):
        X, Y = random_jordan(rng), random_jordan(rng)
        assert X.inner(Y) == Y.inner(X) == X.jmul(Y).trace()


def test_gram_diagonal():
    assert gram_diagonal(QUAT) == (qi(1),) * 3 + (qi(2),) * 12
    assert gram_diagonal(OCT)[:3] == (qi(1),) * 3


def test_lift_examples():
    eps1, eps2, gamma = epsilon_gamma()
    gl = lift_cayley_map(OCT, gamma)
    f14 = Jordan.f_mat(OCT, 0, CE[4])
    assert gl.apply(f14) == Jordan.f_mat(OCT, 0, -CE[4])
    e1l = lift_cayley_map(OCT, eps1)
    assert e1l.apply(Jordan.e_mat(OCT, 1)) == Jordan.e_mat(OCT, 1)
    assert e1l.compose(e1l) == gl


def test_lift_preserves_structure():
    eps1, _, gamma = epsilon_gamma()
    rng = RationalSampler(10)
    for m in (eps1, gamma):
        L = lift_cayley_map(OCT, m)
        for _ in range(6):
            X, Y = random_jordan(rng, OCT), random_jordan(rng, OCT)
            LX, LY = L.apply(X), L.apply(Y)
            assert LX.jmul(LY) == L.apply(X.jmul(Y))
            assert LX.cross(LY) == L.apply(X.cross(Y))
            assert LX.inner(LY) == X.inner(Y)
            assert LX.det() == X.det()


def test_solver_dimensions_quaternionic():
    assert derivation_basis(QUAT).dim == 21
    assert e6_basis(QUAT).dim == 35


def test_solver_dimensions_octonionic():
    assert derivation_basis(OCT).dim == 52
    assert e6_basis(OCT).dim == 78


def test_derivations_inside_e6():
    der, e6 = derivation_basis(OCT), e6_basis(OCT)
    for m in der.members[::7]:
        assert e6.contains(m)
    T = mult_operator(Jordan.diag(OCT, 1, 2, -3))
    assert e6.contains(T)
    assert not der.contains(T)


def test_explicit_generators_are_derivations():
    der = derivation_basis(OCT)
    d1 = so8_combo({(0, 1): qi(0, 1)})
    trip = triality_companions(d1)
    assert der.contains(d_triple_endo(OCT, *trip))
    assert der.contains(slot_generator(OCT, 0, CE[1]))
    assert der.contains(slot_generator(OCT, 2, CE[5]))


def test_phi_splits_as_derivation_plus_multiplication():
    e6 = e6_basis(QUAT)
    der = derivation_basis(QUAT)
    rng = RationalSampler(12)
    for _ in range(5):
        coords = [rng.qi() for _ in range(e6.dim)]
        phi = e6.from_coords(coords)
        T = phi.apply(Jordan.identity(QUAT))
        assert not T.trace()
        delta = phi.add(mult_operator(T), qi(-1))
        assert der.contains(delta)


def test_quaternionic_coordinates_reject_octonionic_entries():
    X = Jordan.f_mat(QUAT, 0, CE[5])
    with pytest.raises(ValueError):
        X.coords()
