#!/usr/bin/env python3
"""
Factorial abundancy, shifted factorials, ABC qualities and radical scans
"""

import math
import statistics
import sys
from fractions import Fraction
from pathlib import Path
sys.path.append(str(Path(__file__).parent.parent / 'src'))

import pytest

from arithmetic import ArithmeticDomainError, abundancy, factorize, primorial, radical
from factorial import (
    ShiftedStatus,
    abc_quality,
    factorial_abundancy,
    factorial_abundancy_increasing,
    factorial_factorization,
    factorial_radical_exponent,
    gap_triples,
    homogeneous_radical_scan,
    legendre_exponent,
    multiperfect_factorials,
    parse_coefficients,
    perfect_factorials,
    poly_radical_scan,
    reference_exponent,
    shifted_factorial_scan,
)
from factorial.polynomial import OK, SKIPPED


@pytest.mark.parametrize("n, p, exponent", [(10, 2, 8), (100, 5, 24), (4, 5, 0), (25, 5, 6)])
def test_legendre_exponent(n, p, exponent):
    assert legendre_exponent(n, p) == exponent


def test_factorial_abundancy_values():
    assert factorial_abundancy(1) == 1
    assert factorial_abundancy(3) == 2
    assert factorial_abundancy(5) == 3
    assert factorial_abundancy(4) == Fraction(60, 24)


def test_legendre_matches_direct_factoring():
    for n in range(1, 21):
        assert factorial_factorization(n).value == math.factorial(n)
        assert factorial_abundancy(n) == abundancy(factorize(math.factorial(n)))


@pytest.mark.parametrize("N, expected", [(30, [3]), (2, []), (10, [3])])
def test_perfect_factorials(N, expected):
    assert perfect_factorials(N) == expected


def test_multiperfect_factorials_to_one_hundred():
    found = multiperfect_factorials(100)
    assert found[2] == [3]
    assert found[3] == [5]
    assert all(len(ns) == 1 for ns in found.values())


@pytest.mark.parametrize("N", [30, 100])
def test_factorial_abundancy_increasing(N):
    assert factorial_abundancy_increasing(N)


def test_factorial_cap():
    with pytest.raises(ArithmeticDomainError):
        factorial_abundancy(201)
    with pytest.raises(ArithmeticDomainError):
        factorial_abundancy(30, cap=20)
    with pytest.raises(ArithmeticDomainError):
        factorial_abundancy(0)


def test_factorial_radical_exponent():
    assert factorial_radical_exponent(2) == 1.0
    assert factorial_radical_exponent(10) == pytest.approx(0.354, abs=1e-3)
    exponents = [factorial_radical_exponent(n) for n in range(10, 201)]
    assert max(exponents) == pytest.approx(factorial_radical_exponent(13))
    assert max(exponents) < 0.5


def test_shifted_factorial_scan():
    rows = shifted_factorial_scan(15, workers=1)
    assert [r.n for r in rows] == list(range(16))
    assert [r.n for r in rows if r.status == ShiftedStatus.PRIME] == [0, 1, 2, 3, 11]
    assert all(r.status in (ShiftedStatus.PRIME, ShiftedStatus.NOT_MULTIPERFECT) for r in rows)
    by_n = {r.n: r for r in rows}
    assert by_n[4].factorization.format() == "5^2"
    assert by_n[6].factorization.format() == "7 * 103"
    assert by_n[12].factorization.format() == "13^2 * 2834329"
    assert by_n[11].value == 39916801


def test_shifted_scan_rejects_negative_n():
    with pytest.raises(ArithmeticDomainError):
        shifted_factorial_scan(-1, workers=1)


@pytest.mark.parametrize("a, b, quality, hit", [
    (1, 8, 1.2263, True),
    (1, 24, 0.9464, False),
    (1, 1, 1.0, False),
])
def test_abc_quality(a, b, quality, hit):
    triple = abc_quality(a, b)
    assert triple.c == a + b
    assert triple.quality == pytest.approx(quality, abs=1e-4)
    assert triple.is_hit == hit


def test_abc_quality_is_symmetric():
    assert abc_quality(8, 1).quality == abc_quality(1, 8).quality
    assert abc_quality(5, 27).rad_abc == abc_quality(27, 5).rad_abc == 30


def test_factorial_triples_have_radical_at_least_that_of_the_shift():
    for n in range(1, 21):
        value = math.factorial(n)
        triple = abc_quality(1, value)
        shifted_rad = radical(factorize(value + 1))
        assert triple.c == value + 1
        assert triple.rad_abc >= shifted_rad
        assert triple.rad_abc == primorial(n) * shifted_rad


@pytest.mark.parametrize("a, b", [(2, 4), (0, 5), (3, -1)])
def test_abc_quality_domain(a, b):
    with pytest.raises(ArithmeticDomainError):
        abc_quality(a, b)


def test_gap_triples():
    rows = gap_triples([6, 28], [120])
    assert [(r.x, r.y) for r in rows] == [(6, 120), (28, 120)]
    assert [r.triple.c for r in rows] == [20, 30]
    assert [(r.triple.a, r.triple.b) for r in rows] == [(1, 19), (7, 23)]
    assert not any(r.odd_gap for r in rows)


def test_gap_triples_skip_identical_pairs():
    rows = gap_triples([6], [6, 28])
    assert [(r.y, r.gap, r.triple.c) for r in rows] == [(28, 22, 14)]


def test_parse_coefficients():
    assert parse_coefficients("1,0,-1") == [1, 0, -1]
    with pytest.raises(ArithmeticDomainError):
        parse_coefficients("1,x")


def test_x_squared_plus_one_has_large_radicals():
    rows = poly_radical_scan([1, 0, 1], 2, 1000)
    assert len(rows) == 999
    exponents = [r.exponent for r in rows if r.status == OK]
    assert statistics.median(exponents) > 1.8
    # 239^2 + 1 = 2 * 13^4
    low = next(r for r in rows if r.point == (239,))
    assert low.rad == 26
    assert low.exponent < 1


def test_linear_polynomial_radical_never_exceeds_x():
    rows = poly_radical_scan([1, 0], 2, 200)
    assert all(r.exponent <= 1 for r in rows)


@pytest.mark.parametrize("coeffs", [[1, -2, 1], [5], [1, 0, 0]])
def test_repeated_roots_and_constants_rejected(coeffs):
    with pytest.raises(ArithmeticDomainError):
        poly_radical_scan(coeffs, 2, 10)


def test_small_values_are_skipped():
    rows = poly_radical_scan([1, 0, -1], -3, 3)
    assert [r.point[0] for r in rows if r.status == SKIPPED] == [-1, 0, 1]
    assert next(r for r in rows if r.point == (2,)).rad == 3


def test_poly_range_budget():
    with pytest.raises(ArithmeticDomainError):
        poly_radical_scan([1, 0, 1], 0, 100, budget=50)
    with pytest.raises(ArithmeticDomainError):
        poly_radical_scan([1, 0, 1], 10, 5)


def test_homogeneous_scan_visits_coprime_pairs():
    rows = homogeneous_radical_scan([1, 0, 1], max_abs=10)
    assert len(rows) == 63
    assert all(math.gcd(*r.point) == 1 for r in rows)
    first = rows[0]
    assert first.point == (1, 1)
    assert first.value == 2
    assert first.exponent is None


@pytest.mark.parametrize("coeffs", [[1, 2, 1], [1, 0, 0]])
def test_forms_with_repeated_factors_rejected(coeffs):
    with pytest.raises(ArithmeticDomainError):
        homogeneous_radical_scan(coeffs, max_abs=5)


def test_form_scan_bound():
    with pytest.raises(ArithmeticDomainError):
        homogeneous_radical_scan([1, 0, 1], max_abs=51)


def test_reference_exponent():
    assert reference_exponent([1, 0, 1]) == 1
    assert reference_exponent([1, 0, 0, 1], homogeneous=True) == 1


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
