#!/usr/bin/env python3
"""
Segmented sigma sieve and the multiperfect search driver
"""

import sys
from pathlib import Path
sys.path.append(str(Path(__file__).parent.parent / 'src'))

import numpy as np
import pytest

from arithmetic import ArithmeticDomainError, SegmentTooLarge, factorize, sigma
from search import MultiperfectSearch, SearchHit, search_multiperfect, sieve_sigma


def naive_hits(limit):
    sigmas = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            sigmas[m] += d
    return [(m, sigmas[m] // m) for m in range(1, limit + 1)
            if sigmas[m] % m == 0 and sigmas[m] >= 2 * m]


def test_sieve_first_values():
    assert sieve_sigma(1, 11).tolist() == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18]


@pytest.mark.parametrize("lo, hi", [(1, 500), (37, 412), (999, 1000), (10**6, 10**6 + 300)])
def test_sieve_matches_factor_sigma(lo, hi):
    sigmas = sieve_sigma(lo, hi)
    assert len(sigmas) == hi - lo
    for offset, value in enumerate(sigmas.tolist()):
        assert value == sigma(factorize(lo + offset))


@pytest.mark.parametrize("cuts", [
    [1, 10**5],
    [1, 2, 4097, 50000, 50001, 99999, 10**5],
    list(range(1, 10**5, 7919)) + [10**5],
])
def test_partitioned_sieve_equals_single_segment(cuts):
    whole = sieve_sigma(1, 10**5)
    pieces = np.concatenate([sieve_sigma(lo, hi) for lo, hi in zip(cuts, cuts[1:])])
    assert np.array_equal(pieces, whole)


def test_sieve_rejects_bad_segments():
    with pytest.raises(ArithmeticDomainError):
        sieve_sigma(5, 5)
    with pytest.raises(ArithmeticDomainError):
        sieve_sigma(0, 10)
    with pytest.raises(SegmentTooLarge):
        sieve_sigma(1, 101, max_segment=50)


def test_search_to_ten_thousand():
    hits = search_multiperfect(10**4, workers=1, segment_size=1000)
    assert [(h.m, h.k) for h in hits] == [(6, 2), (28, 2), (120, 3), (496, 2), (672, 3), (8128, 2)]
    assert hits[0].label == "perfect"
    assert hits[2].label == "3-perfect"


def test_search_matches_naive_oracle():
    hits = search_multiperfect(50000, workers=1, segment_size=4096)
    assert [(h.m, h.k) for h in hits] == naive_hits(50000)


def test_k_filter():
    hits = search_multiperfect(40000, k_filter=4, workers=1)
    assert [h.m for h in hits] == [30240, 32760]


def test_segment_ids_follow_segments():
    engine = MultiperfectSearch(1000, workers=1, segment_size=100)
    hits = engine.run()
    assert len(engine.segments()) == 10
    assert [(h.m, h.segment_id) for h in hits] == [(6, 0), (28, 0), (120, 1), (496, 4), (672, 6)]
    summary = engine.summary()
    assert summary['hits_by_k'] == {2: 3, 3: 2}
    assert summary['segments'] == 10


def test_output_independent_of_worker_count():
    single = search_multiperfect(60000, workers=1, segment_size=5000)
    pooled = search_multiperfect(60000, workers=2, segment_size=5000)
    assert single == pooled


def test_limit_below_two_rejected():
    with pytest.raises(ArithmeticDomainError):
        MultiperfectSearch(1)


def test_hits_sort_by_m():
    assert sorted([SearchHit(28, 2, 0), SearchHit(6, 2, 0)])[0].m == 6


@pytest.mark.slow
def test_search_to_one_million_any_pool_size():
    expected = naive_hits(10**6)
    assert [m for m, _ in expected] == [6, 28, 120, 496, 672, 8128, 30240, 32760, 523776]
    for workers in (1, 2, 8):
        hits = search_multiperfect(10**6, workers=workers, segment_size=2**17)
        assert [(h.m, h.k) for h in hits] == expected


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
