from fractions import Fraction

import pytest

import sqmodp


def test_legendre_routes_agree():
    for a in range(1, 29):
        assert sqmodp.legendre_euler(a, 29) == sqmodp.legendre_reciprocity(a, 29)
    assert sqmodp.legendre_euler(29, 29) == 0
    assert sqmodp.legendre_sequence(7) == [1, 1, -1, 1, -1, -1]


def test_primitive_roots_and_pairs():
    assert sqmodp.primitive_roots(11) == [2, 6, 7, 8]
    assert sqmodp.inverse_pairs(11) == [(2, 6), (7, 8)]
    assert len(sqmodp.primitive_roots(29)) == sqmodp.euler_phi(28)


def test_orbit_and_sqrt():
    orbit = sqmodp.lcg_orbit(1904, 8191)
    assert orbit.states == [1, 1904, 4794, 3002, 6681]
    assert orbit.period == 5
    assert sqmodp.sqrt_mod(2, 8191) == 128
    assert sqmodp.sqrt_mod(2, 11) is None


def test_inversion_summary():
    s = sqmodp.inversion_summary(29)
    assert [c for _, c in s.per_root][:3] == [129, 159, 168]
    assert s.sample_mean == Fraction(351, 2)
    assert abs(s.sample_sd - 26.02) <= 0.01
    assert s.theory.variance == Fraction(2301, 4)


def test_runs():
    assert sqmodp.count_runs([1, 1, -1, 1, -1, -1]) == 4
    assert sqmodp.pair_counts(sqmodp.legendre_sequence(13)) == sqmodp.aladov_predicted(13)
    assert sqmodp.runs_null_moments(48, 48) == (Fraction(49), Fraction(2256, 95))
    assert all(r == (p + 1) // 2 for p, r in sqmodp.scan_runs(count=50))


def test_simulation_is_reproducible():
    a = sqmodp.simulate_inversions(29, iterations=2000, seed=3)
    b = sqmodp.simulate_inversions(29, iterations=2000, seed=3, workers=4)
    assert a.histogram == b.histogram
    assert sum(a.histogram.values()) == 2000
    assert a.seed == 3 and a.rng_algorithm
    r = sqmodp.simulate_runs(97, iterations=1000, seed=3)
    assert sum(r.histogram.values()) == 1000


def test_domain_errors_are_value_errors():
    with pytest.raises(sqmodp.DomainError):
        sqmodp.primitive_roots(15)
    with pytest.raises(ValueError):
        sqmodp.count_inversions([1, 1])
    with pytest.raises(ValueError):
        sqmodp.scan_runs()
