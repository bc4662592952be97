from exlie.scalars import QI, Q, qi, parse_scalar, RationalSampler

import pytest


def test_basic_field_examples():
    assert qi(1, 1) * qi(1, -1) == qi(2)
    assert qi(0, 1) ** 4 == qi(1)
    z = qi("3/2", "1/4")
    assert z.conj() == qi("3/2", "-1/4")


def test_tau_involution_and_multiplicativity():
    assert qi(0, 1).conj() == qi(0, -1)
    assert qi(5).conj() == qi(5)
    z = qi(2, 3)
    assert z.conj().conj() == z
    w = qi("-1/3", "2/7")
    assert (z * w).conj() == z.conj() * w.conj()
    assert (z + w).conj() == z.conj() + w.conj()


def test_field_axioms_random():
    rng = RationalSampler(3)
    for _ in range(50):
        a, b, c = rng.qi(), rng.qi(), rng.qi()
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        if a:
            assert a * (qi(1) / a) == qi(1)
            assert (b / a) * a == b


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        qi(1) / qi(0)


def test_parse_format_round_trip():
    rng = RationalSampler(11)
    values = [qi(0), qi(1), qi(-1), qi(0, 1), qi(0, -1), qi("3/2", "-1/4"),
              qi("-7/3"), qi(0, "5/6")]
    values += [rng.qi() for _ in range(30)]
    for z in values:
        assert parse_scalar(str(z)) == z
    assert parse_scalar("3/2 + 1/4 i") == qi("3/2", "1/4")
    assert parse_scalar("3/2 - 1/4 i") == qi("3/2", "-1/4")


def test_sampler_determinism_and_bounds():
    a = [RationalSampler(5).rational() for _ in range(10)]
    b = [RationalSampler(5).rational() for _ in range(10)]
    assert a == b
    for x in a:
        assert abs(x.numerator) <= 7 and 1 <= x.denominator <= 7
