from exlie.cayley import Cayley, E as CE, epsilon_gamma
from exlie.jordan import Jordan, Endo, OCT, QUAT, e6_basis, mult_operator
from exlie.freudenthal import (FVec, E7Op, P_QUAT, P_OCT, inner_p, skew_p,
                               lam, tau_lam, vee, cross_op, lam_matrix,
                               p_lift_map, symplectic_defect)
from exlie.scalars import qi, Q, RationalSampler
from exlie import linalg


def rj(rng, space=QUAT):
    return Jordan.from_coords(
        space, {rng.randint(0, space.dim - 1): rng.qi() for _ in range(3)})


def rp(rng, sp=P_QUAT):
    return FVec(sp, rj(rng, sp.jspace), rj(rng, sp.jspace), rng.qi(), rng.qi())


def zero_op(sp=P_QUAT):
    return E7Op(sp, Endo(sp.jspace), Jordan.zero(sp.jspace),
                Jordan.zero(sp.jspace), 0)


def test_pairings():
    od, ol = FVec.one_dot(P_QUAT), FVec.one_ldot(P_QUAT)
    assert skew_p(od, ol) == qi(1)
    e1d = FVec.x_dot(P_QUAT, Jordan.e_mat(QUAT, 0))
    assert inner_p(e1d, e1d) == qi(1)
    rng = RationalSampler(1)
    for _ in range(10):
        P, Q_ = rp(rng), rp(rng)
        assert not skew_p(P, P)
        assert skew_p(P, Q_) == -skew_p(Q_, P)
        assert inner_p(P, Q_) == inner_p(Q_, P)
        # {P, Q} = (P, lam Q)
        assert skew_p(P, Q_) == inner_p(P, lam(Q_))


def test_lambda_map():
    od, ol = FVec.one_dot(P_QUAT), FVec.one_ldot(P_QUAT)
    assert lam(od) == -ol
    assert tau_lam(od) == -ol
    rng = RationalSampler(2)
    for _ in range(10):
        P, Q_ = rp(rng), rp(rng)
        assert lam(lam(P)) == -P
        assert skew_p(lam(P), lam(Q_)) == skew_p(P, Q_)


def test_operator_blocks():
    rng = RationalSampler(3)
    P = rp(rng)
    nu_op = E7Op(P_QUAT, Endo(QUAT), Jordan.zero(QUAT), Jordan.zero(QUAT), 1)
    img = nu_op.apply(P)
    assert img.X == P.X.scale(qi("-1/3"))
    assert img.Y == P.Y.scale(qi("1/3"))
    assert img.xi == P.xi and img.eta == -P.eta
    A = Jordan.diag(QUAT, 1, -2, 4)
    a_op = E7Op(P_QUAT, Endo(QUAT), A, Jordan.zero(QUAT), 0)
    assert a_op.apply(FVec.one_ldot(P_QUAT)) == FVec.x_dot(P_QUAT, A)
    phi = mult_operator(Jordan.diag(QUAT, 1, 0, -1))
    phi_op = E7Op(P_QUAT, phi, Jordan.zero(QUAT), Jordan.zero(QUAT), 0)
    X = rj(rng)
    assert phi_op.apply(FVec.x_dot(P_QUAT, X)) == FVec.x_dot(
        P_QUAT, phi.apply(X))


def test_vee():
    Emat = Jordan.identity(QUAT)
    assert not vee(Emat, Emat)
    E1 = Jordan.e_mat(QUAT, 0)
    expected = mult_operator(E1 - Emat.scale(qi("1/3")))
    assert vee(E1, E1) == expected
    e6 = e6_basis(QUAT)
    rng = RationalSampler(4)
    for _ in range(10):
        assert e6.contains(vee(rj(rng), rj(rng)))


def test_cross_op_examples():
    od, ol = FVec.one_dot(P_QUAT), FVec.one_ldot(P_QUAT)
    assert not cross_op(od, od)
    c = cross_op(od, ol)
    assert c.nu == qi("-3/8") and not c.A and not c.B and not c.phi
    e1d = FVec.x_dot(P_QUAT, Jordan.e_mat(QUAT, 0))
    assert not cross_op(e1d, e1d)


def test_cross_op_symmetry_and_membership():
    rng = RationalSampler(5)
    for _ in range(6):
        P, Q_ = rp(rng), rp(rng)
        c1, c2 = cross_op(P, Q_), cross_op(Q_, P)
        assert c1 == c2
        assert symplectic_defect(c1)


def test_symplectic_condition_for_operators():
    rng = RationalSampler(6)
    P, Q_ = rp(rng), rp(rng)
    op = cross_op(P, Q_)
    units = [FVec.unit(P_QUAT, k) for k in range(P_QUAT.dim)]
    for a in units[:8]:
        for b in units[:8]:
            assert not (skew_p(op.apply(a), b) + skew_p(a, op.apply(b)))


def test_quaternionic_closure_of_cross():
    rng = RationalSampler(7)
    for _ in range(5):
        P, Q_ = rp(rng), rp(rng)
        op = cross_op(P, Q_)
        img = op.apply(rp(rng))
        assert img.is_quaternionic()


def test_matrix_decompose_round_trip():
    rng = RationalSampler(8)
    for _ in range(5):
        op = cross_op(rp(rng), rp(rng))
        back = E7Op.from_matrix(P_QUAT, op.matrix(), check=True)
        assert back == op


def test_commutator_matches_component_formula():
    """[Phi1, Phi2] via matrices equals the componentwise bracket
    ((phi + 2nu/3) acting on A-slots, vee terms, trace pairing)."""
    rng = RationalSampler(9)
    e6 = e6_basis(QUAT)
    for _ in range(4):
        op1 = cross_op(rp(rng), rp(rng))
        op2 = cross_op(rp(rng), rp(rng))
        got = op1.commutator(op2)
        phi = (op1.phi.commutator(op2.phi)
               .add(vee(op1.A, op2.B), qi(2))
               .add(vee(op2.A, op1.B), qi(-2)))
        A = (op1.phi.apply(op2.A) + op2.A.scale(op1.nu * qi("2/3"))
             - op2.phi.apply(op1.A) - op1.A.scale(op2.nu * qi("2/3")))
        B = (op1.phi.transpose_gram().apply(op2.B).scale(-1)
             - op2.B.scale(op1.nu * qi("2/3"))
             + op2.phi.transpose_gram().apply(op1.B)
             + op1.B.scale(op2.nu * qi("2/3")))
        nu = op1.A.inner(op2.B) - op1.B.inner(op2.A)
        assert got == E7Op(P_QUAT, phi, A, B, nu)


def test_lift_commutes_with_fixed_operators():
    """A P-space operator with epsilon-fixed components commutes with the
    lifted automorphism; one with moving components does not."""
    eps1, _, _ = epsilon_gamma()
    L = p_lift_map(P_OCT, eps1)
    quat_P = FVec.x_dot(P_OCT, Jordan.f_mat(OCT, 0, CE[1]))
    quat_Q = FVec.y_dot(P_OCT, Jordan.f_mat(OCT, 1, CE[2]))
    fixed_op = cross_op(quat_P, quat_Q)
    M = fixed_op.matrix()
    assert linalg.rows_eq(linalg.rows_mul(L, M), linalg.rows_mul(M, L))
    moving_P = FVec.x_dot(P_OCT, Jordan.f_mat(OCT, 0, CE[4]))
    moving_op = cross_op(moving_P, quat_Q)
    M2 = moving_op.matrix()
    assert not linalg.rows_eq(linalg.rows_mul(L, M2), linalg.rows_mul(M2, L))
