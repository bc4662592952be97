from exlie.exceptional import (epsilon_fixed, cartan_elements,
                               cartan_gram_closed)
from exlie import roots as R, reference as REF
from exlie.scalars import qi, Q

import pytest


def pipeline(level):
    sub = epsilon_fixed(level)
    els, labels = cartan_elements(level)
    cc = [sub.coordinatize(e) for e in els]
    return sub, labels, cc


def test_verify_cartan_level4():
    sub, labels, cc = pipeline(4)
    ok, rank, report = R.verify_cartan(sub, cc)
    assert ok and rank == 3
    assert report["normalizer_dim"] == 3


def test_verify_cartan_negative_control():
    sub, labels, cc = pipeline(4)
    rts, _ = R.root_decomposition(sub, cc, check_cartan=False)
    nilpotent = rts[0].vector_coords
    ok, _, report = R.verify_cartan(sub, [nilpotent])
    assert not ok
    assert report["normalizer_dim"] > 1


def test_roots_level4_table_and_geometry():
    sub, labels, cc = pipeline(4)
    rts, zero_dim = R.root_decomposition(sub, cc, check_cartan=False)
    assert len(rts) == 18 and zero_dim == 3
    computed = sorted(r.functional for r in rts)
    expected = sorted(REF.evaluate(fn, labels) for fn in REF.ROOTS_21)
    assert computed == expected
    # negative-closure and multiplicity one are by construction;
    # check the display subset flag
    display = set(REF.evaluate(fn, labels) for fn in REF.ROOTS_21_DISPLAY)
    assert display < set(computed) and len(display) == 14
    gq = [[v.re for v in row] for row in cartan_gram_closed(4)]
    pi = [REF.evaluate(fn, labels) for fn in REF.PI_21]
    tab = R.fundamental_expansion([r.functional for r in rts], pi)
    for fn, coeffs in REF.EXPANSIONS_21:
        assert tab[REF.evaluate(fn, labels)] == coeffs
    for i, p in enumerate(pi):
        can = R.canonical_element(gq, p)
        assert tuple(c.re for c in can) == REF.CANONICAL_21[i]
    for (i, j), v in REF.INNER_21.items():
        assert R.root_inner(gq, pi[i], pi[j]) == v
    A, inners = R.cartan_matrix(pi, gq)
    assert R.dynkin_type(A, inners) == "C3"


def test_root_set_symmetry_level6():
    sub, labels, cc = pipeline(6)
    rts, zero_dim = R.root_decomposition(sub, cc, check_cartan=False)
    assert len(rts) == 30 and zero_dim == 5
    funcs = set(r.functional for r in rts)
    for fn in funcs:
        assert tuple(-c for c in fn) in funcs


def test_classification_stability_under_permutation():
    sub, labels, cc = pipeline(4)
    gq = [[v.re for v in row] for row in cartan_gram_closed(4)]
    pi = [REF.evaluate(fn, labels) for fn in REF.PI_21]
    import itertools
    for perm in itertools.permutations(range(3)):
        ppi = [pi[k] for k in perm]
        A, inners = R.cartan_matrix(ppi, gq)
        assert R.dynkin_type(A, inners) == "C3"


def test_independent_simple_system_level4():
    sub, labels, cc = pipeline(4)
    rts, _ = R.root_decomposition(sub, cc, check_cartan=False)
    gq = [[v.re for v in row] for row in cartan_gram_closed(4)]
    simple = R.extract_simple_system([r.functional for r in rts])
    assert len(simple) == 3
    A, inners = R.cartan_matrix(simple, gq)
    assert R.dynkin_type(A, inners) == "C3"


def catalog_case(A, norms=None):
    r = len(A)
    if norms is None:
        norms = [[Q(2) if i == j else Q(A[i][j]) for j in range(r)]
                 for i in range(r)]
    return R.dynkin_type(A, norms)


def test_dynkin_catalog():
    # A3 path
    A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert catalog_case(A3) == "A3"
    # D4: star
    D4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    assert catalog_case(D4) == "D4"
    # G2
    G2 = [[2, -1], [-3, 2]]
    n = [[Q(1, 3), Q(-1, 2)], [Q(-1, 2), Q(1)]]
    assert R.dynkin_type(G2, n) == "G2"
    # F4: double edge interior
    F4 = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    nf = [[Q(2), Q(-1), 0, 0], [Q(-1), Q(2), Q(-1), 0],
          [0, Q(-1), Q(1), Q(-1, 2)], [0, 0, Q(-1, 2), Q(1)]]
    assert R.dynkin_type(F4, nf) == "F4"
    # B3: double edge at the end, terminal root short
    B3 = [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]
    nb = [[Q(2), Q(-1), 0], [Q(-1), Q(2), Q(-1)], [0, Q(-1), Q(1)]]
    assert R.dynkin_type(B3, nb) == "B3"
    # C3: double edge at the end, terminal root long
    C3 = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
    nc = [[Q(1), Q(-1, 2), 0], [Q(-1, 2), Q(1), Q(-1)], [0, Q(-1), Q(2)]]
    assert R.dynkin_type(C3, nc) == "C3"
    # E6 / E7 / E8 arms
    def chain_with_branch(n, branch_at):
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        A[branch_at][n - 1] = A[n - 1][branch_at] = -1
        return A
    assert catalog_case(chain_with_branch(6, 2)) == "E6"
    assert catalog_case(chain_with_branch(7, 3)) == "E7"
    assert catalog_case(chain_with_branch(8, 4)) == "E8"
    assert catalog_case(chain_with_branch(6, 1)) == "D6"


def test_non_integer_cartan_matrix_rejected():
    gq = [[Q(1), Q(0)], [Q(0), Q(1)]]
    with pytest.raises(ValueError):
        R.cartan_matrix([(Q(1), Q(0)), (Q(1), Q(1))], gq)
