import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from arithmetic import ArithmeticDomainError, SegmentTooLarge, factorize, sigma
from config.settings import ToolkitSettings, load_settings


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SearchHit:
    """m with sigma(m) = k*m, k >= 2, found in sieve segment `segment_id`"""

    m: int
    k: int
    segment_id: int

    @property
    def label(self) -> str:
        return "perfect" if self.k == 2 else f"{self.k}-perfect"


def sieve_sigma(lo: int, hi: int, max_segment: Optional[int] = None) -> np.ndarray:
    """
    sigma(n) for every n in [lo, hi) as an int64 array.

    Every divisor pair (d, m/d) with d <= m/d is added once, so only the
    d <= sqrt(hi - 1) loop runs in Python; the multiples are strided numpy
    slices.
    """
    if lo < 1 or hi <= lo:
        raise ArithmeticDomainError(f"invalid sieve segment [{lo}, {hi})")
    if max_segment is None:
        max_segment = load_settings().max_segment_size
    if hi - lo > max_segment:
        raise SegmentTooLarge(
            f"segment [{lo}, {hi}) holds {hi - lo} entries, budget is {max_segment}"
        )

    size = hi - lo
    sigmas = np.zeros(size, dtype=np.int64)
    for d in range(1, math.isqrt(hi - 1) + 1):
        # first multiple m of d in the segment with cofactor m/d >= d
        start = max(d * d, -(-lo // d) * d)
        if start >= hi:
            continue
        count = (hi - 1 - start) // d + 1
        q0 = start // d
        sigmas[start - lo::d] += d + np.arange(q0, q0 + count, dtype=np.int64)
        if lo <= d * d < hi:
            sigmas[d * d - lo] -= d  # square: d counted once
    return sigmas


def _segment_hits(args: Tuple[int, int, int, int, Optional[int]]) -> List[Tuple[int, int, int]]:
    """Worker: (m, k, segment_id) triples for one segment"""
    segment_id, lo, hi, max_segment, k_filter = args
    sigmas = sieve_sigma(lo, hi, max_segment)
    values = np.arange(lo, hi, dtype=np.int64)
    mask = (sigmas % values == 0) & (sigmas >= 2 * values)
    if k_filter is not None:
        mask &= sigmas == k_filter * values
    found = np.flatnonzero(mask)
    return [(int(values[i]), int(sigmas[i] // values[i]), segment_id) for i in found]


class MultiperfectSearch:
    """
    Exhaustive search for multiperfect numbers m <= limit.

    Disjoint contiguous segments go to a process pool; hits come back keyed
    by segment index, so the merged output does not depend on the pool size.
    """

    def __init__(self, limit: int, k_filter: Optional[int] = None,
                 workers: Optional[int] = None, segment_size: Optional[int] = None,
                 settings: Optional[ToolkitSettings] = None):
        if limit < 2:
            raise ArithmeticDomainError(f"search limit must be at least 2, got {limit}")
        self.settings = settings or load_settings()
        self.limit = limit
        self.k_filter = k_filter
        self.workers = workers or self.settings.workers
        self.segment_size = segment_size or self.settings.segment_size
        self.hits: List[SearchHit] = []
        self.elapsed = None

    def segments(self) -> List[Tuple[int, int, int, int, Optional[int]]]:
        tasks = []
        lo = 1
        while lo <= self.limit:
            hi = min(lo + self.segment_size, self.limit + 1)
            tasks.append((len(tasks), lo, hi, self.settings.max_segment_size, self.k_filter))
            lo = hi
        return tasks

    def run(self, progress: bool = False) -> List[SearchHit]:
        tasks = self.segments()
        logger.info("Searching m <= %d in %d segments with %d workers",
                    self.limit, len(tasks), self.workers)
        started = time.perf_counter()

        if self.workers == 1 or len(tasks) == 1:
            results = [_segment_hits(t) for t in tqdm(tasks, disable=not progress, unit="seg")]
        else:
            with ProcessPoolExecutor(max_workers=min(self.workers, len(tasks))) as executor:
                # map keeps task order, which is segment order
                results = list(tqdm(executor.map(_segment_hits, tasks), total=len(tasks),
                                    disable=not progress, unit="seg"))

        hits = []
        for segment in results:
            for m, k, segment_id in segment:
                self._revalidate(m, k)
                hits.append(SearchHit(m=m, k=k, segment_id=segment_id))
        hits.sort()

        self.hits = hits
        self.elapsed = time.perf_counter() - started
        logger.info("Found %d hits in %.2f s", len(hits), self.elapsed)
        return hits

    @staticmethod
    def _revalidate(m: int, k: int):
        if sigma(factorize(m)) != k * m:
            raise AssertionError(f"sieve reported {m} as {k}-perfect but sigma disagrees")

    def summary(self) -> Dict[str, object]:
        by_k: Dict[int, int] = {}
        for hit in self.hits:
            by_k[hit.k] = by_k.get(hit.k, 0) + 1
        return {
            'limit': self.limit,
            'segments': len(self.segments()),
            'workers': self.workers,
            'hits_by_k': dict(sorted(by_k.items())),
            'elapsed_seconds': self.elapsed,
        }


def search_multiperfect(limit: int, k_filter: Optional[int] = None,
                        workers: Optional[int] = None,
                        segment_size: Optional[int] = None,
                        progress: bool = False) -> List[SearchHit]:
    """All m <= limit with m | sigma(m) and sigma(m)/m >= 2, ascending in m"""
    return MultiperfectSearch(limit, k_filter, workers, segment_size).run(progress=progress)
