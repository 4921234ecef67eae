#!/usr/bin/env python3
"""
Repunits, their abundancy chains and multiperfect multirepdigits
"""

import math
import sys
from fractions import Fraction
from pathlib import Path
sys.path.append(str(Path(__file__).parent.parent / 'src'))

import pytest

from arithmetic import ArithmeticDomainError, is_prime, primes_up_to
from config import load_settings, with_overrides
from repdigit import (
    MULTIPERFECT,
    UNDETERMINED,
    MultirepdigitSpec,
    RepunitSpec,
    factorize_repunit,
    lucas_u,
    prime_set_identity,
    rank_divides_p_minus_one,
    rank_of_apparition,
    repunit_abundancy_growth,
    scan_multirepdigit_multiperfect,
    sigma_ratio_chain,
    submultiplicative,
)

SMALL_TRIAL = with_overrides(load_settings(), trial_division_bound=1000)


@pytest.mark.parametrize("g, n, value", [(10, 3, 111), (2, 5, 31), (3, 4, 40), (7, 1, 1)])
def test_lucas_u(g, n, value):
    assert lucas_u(g, n) == value


def test_repunits_divide_along_divisors():
    for g in (2, 3, 10):
        for b in range(1, 25):
            for a in range(1, b + 1):
                if b % a == 0:
                    assert lucas_u(g, b) % lucas_u(g, a) == 0


def test_lucas_u_domain():
    with pytest.raises(ArithmeticDomainError):
        lucas_u(1, 3)
    with pytest.raises(ArithmeticDomainError):
        lucas_u(10, 0)


def test_multirepdigit_spec():
    spec = MultirepdigitSpec(RepunitSpec(10, 3), 7)
    assert spec.value == 777
    assert spec.is_repdigit
    assert not MultirepdigitSpec(RepunitSpec(10, 3), 12).is_repdigit
    with pytest.raises(ArithmeticDomainError):
        MultirepdigitSpec(RepunitSpec(10, 3), 0)


def test_factorize_repunit_splits_even_lengths():
    assert factorize_repunit(10, 6).format() == "3 * 7 * 11 * 13 * 37"
    assert factorize_repunit(2, 12).value == 4095


def test_ratio_chain_base_two():
    chain = sigma_ratio_chain(2, 3)
    assert chain.ratios == (Fraction(1), Fraction(4, 3), Fraction(8, 5), Fraction(144, 85))
    assert chain.truncated_at is None


@pytest.mark.parametrize("g", range(2, 11))
def test_ratio_chain_increases(g):
    chain = sigma_ratio_chain(g, 5)
    assert len(chain.ratios) == 6
    assert chain.strictly_increasing


def test_ratio_chain_truncates_at_effort_cap():
    chain = sigma_ratio_chain(10, 6, settings=SMALL_TRIAL, rho_iterations=1)
    assert chain.truncated_at == 5
    assert len(chain.ratios) == 5


@pytest.mark.parametrize("p, g, rank", [(7, 2, 3), (11, 10, 2), (37, 10, 3), (3, 10, 3), (3, 4, 3), (5, 2, 4)])
def test_rank_of_apparition(p, g, rank):
    assert rank_of_apparition(p, g) == rank
    assert lucas_u(g, rank) % p == 0


def test_rank_divides_p_minus_one():
    for g in (2, 3, 10):
        for p in primes_up_to(10**4).tolist():
            if g % p == 0 or (g - 1) % p == 0:
                continue
            assert rank_divides_p_minus_one(p, g)
    assert rank_divides_p_minus_one(3, 4) is None


def test_rank_domain():
    with pytest.raises(ArithmeticDomainError):
        rank_of_apparition(5, 10)
    with pytest.raises(ArithmeticDomainError):
        rank_of_apparition(9, 2)


def test_abundancy_growth_records():
    record = repunit_abundancy_growth(10, 2)
    assert record.ratio == Fraction(12, 11)
    assert record.bound_term == 1.0
    assert record.reciprocal_prime_sum == Fraction(1, 10)
    assert record.within_exp_bound

    record = repunit_abundancy_growth(2, 6)
    assert record.ratio == Fraction(104, 63)
    assert record.bound_term == pytest.approx((1 + math.log(2)) ** 2)
    assert record.quotient == pytest.approx(math.log(104 / 63) / (1 + math.log(2)) ** 2)
    assert record.within_exp_bound


@pytest.mark.parametrize("g, constant", [(2, 0.6), (3, 1.0), (10, 0.5)])
def test_growth_quotient_stays_below_one_constant_per_base(g, constant):
    records = [repunit_abundancy_growth(g, m) for m in range(2, 41)]
    assert all(r.within_exp_bound for r in records)
    assert all(0 < r.quotient < constant for r in records)
    # the bound term only moves when omega(m) does
    assert all(r.bound_term == 1.0 for r in records if is_prime(r.m))


def test_growth_needs_index_two():
    with pytest.raises(ArithmeticDomainError):
        repunit_abundancy_growth(10, 1)


@pytest.mark.parametrize("g, D_max, expected", [
    (2, 10, [(1, 2, 2), (2, 8, 3)]),
    (3, 30, [(1, 7, 2), (1, 30, 3), (2, 3, 3)]),
    (10, 9, []),
])
def test_multirepdigit_scan(g, D_max, expected):
    hits = scan_multirepdigit_multiperfect(g, D_max, 3)
    assert [(h.s, h.D, h.k) for h in hits] == expected
    assert all(h.status == MULTIPERFECT for h in hits)
    for hit in hits:
        assert MultirepdigitSpec(RepunitSpec(g, 2 ** hit.s), hit.D).value in {6, 28, 120}


def test_multirepdigit_scan_marks_unfactored_lengths():
    hits = scan_multirepdigit_multiperfect(10, 5, 5, settings=SMALL_TRIAL, rho_iterations=1)
    undetermined = [(h.s, h.D) for h in hits if h.status == UNDETERMINED]
    assert undetermined == [(5, D) for D in range(1, 6)]
    assert all(h.k is None and not h.power_of_two for h in hits if h.status == UNDETERMINED)


def test_submultiplicative_examples():
    lhs, rhs, equal = submultiplicative(3, 5)
    assert lhs == rhs == Fraction(8, 5)
    assert equal
    lhs, rhs, equal = submultiplicative(2, 6)
    assert (lhs, rhs, equal) == (Fraction(7, 3), Fraction(3), False)


def test_submultiplicative_equality_exactly_when_coprime():
    for D in range(1, 121):
        for U in range(1, 121):
            lhs, rhs, equal = submultiplicative(D, U)
            assert lhs <= rhs
            assert equal == (math.gcd(D, U) == 1)


@pytest.mark.slow
def test_submultiplicative_to_five_hundred():
    for D in range(1, 501):
        for U in range(D, 501):
            lhs, rhs, equal = submultiplicative(D, U)
            assert lhs <= rhs
            assert equal == (math.gcd(D, U) == 1)


@pytest.mark.parametrize("k", range(1, 7))
def test_prime_set_identity(k):
    identity = prime_set_identity(k, 40)
    assert identity.primes == tuple(p for p in range(2, 14) if is_prime(p))[:k]
    assert identity.holds
    assert identity.log_box_sum == pytest.approx(identity.log_closed_form, rel=1e-6)


def test_prime_set_identity_single_prime_closed_form():
    # P = {2}: sum a/2^a -> 2
    assert prime_set_identity(1, 10).closed_form == 2


def test_prime_set_identity_domain():
    with pytest.raises(ArithmeticDomainError):
        prime_set_identity(7, 10)
    with pytest.raises(ArithmeticDomainError):
        prime_set_identity(3, 0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
