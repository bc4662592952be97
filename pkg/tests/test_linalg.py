import random

from exlie import linalg
from exlie.scalars import qi, Q


def random_sparse_system(seed, nrows, ncols, rank_limit):
    rng = random.Random(seed)
    base = []
    for _ in range(rank_limit):
        row = {rng.randrange(ncols): rng.randint(-3, 3) for _ in range(5)}
        base.append({k: v for k, v in row.items() if v})
    return [dict(base[rng.randrange(rank_limit)]) for _ in range(nrows)]


def test_nullspace_modular_matches_exact():
    for seed in (0, 1, 2):
        rows = random_sparse_system(seed, 400, 90, 60)
        qrows = [{j: qi(v) for j, v in r.items()} for r in rows]
        exact = linalg.nullspace_exact(qrows, 90)
        mod = linalg.nullspace_int(rows, 90)
        assert len(exact) == len(mod)
        for a, b in zip(exact, mod):
            assert linalg.vec_eq(a, b)
        for v in exact:
            for r in qrows:
                assert not linalg.vec_dot(r, v)


def test_rref_membership_coordinates():
    rows = [{0: qi(1), 2: qi(2)}, {1: qi(1), 2: qi(-1)}]
    basis = linalg.nullspace_exact(rows, 3)
    assert len(basis) == 1
    red = linalg.RowReducer(3)
    for r in rows:
        red.add_row(r)
    free = red.free_cols()
    v = linalg.vec_scale(basis[0], qi(5))
    coords = linalg.coords_in_rref_span(v, basis, free)
    assert coords == [qi(5)]


def test_solve_exact_and_inconsistent():
    rows = [{0: qi(2)}, {0: qi(1), 1: qi(1)}]
    sol = linalg.solve_exact(rows, [{0: qi(4), 1: qi(5)}], 2)[0]
    assert sol.get(0) == qi(2) and sol.get(1) == qi(3)
    try:
        linalg.solve_exact([{0: qi(1)}, {0: qi(1)}],
                           [{0: qi(1), 1: qi(2)}], 1)
    except ValueError:
        pass
    else:
        raise AssertionError("inconsistent system not detected")


def test_min_poly_and_rational_roots():
    rows = {0: {0: qi(1)}, 1: {1: qi("1/2")}, 2: {2: qi("1/2")},
            3: {3: qi(-2)}}
    mv = lambda v: linalg.rows_apply(rows, v)
    poly = linalg.min_poly_of_vector(mv, {0: qi(1), 1: qi(1), 3: qi(2)}, 5)
    roots, rest = linalg.rational_roots(poly)
    assert sorted(roots) == [Q(-2), Q("1/2"), Q(1)]
    assert len(rest) == 1


def test_rows_helpers():
    a = {0: {0: qi(1), 1: qi(2)}, 1: {0: qi(3)}}
    b = {0: {1: qi(1)}, 1: {0: qi(1)}}
    ab = linalg.rows_mul(a, b)
    assert ab[0].get(0) == qi(2) and ab[0].get(1) == qi(1)
    comm = linalg.rows_commutator(a, b)
    tr = linalg.rows_trace_product(a, b)
    assert tr == qi(2) + qi(3)  # a01*b10 + a10... trace of a@b
