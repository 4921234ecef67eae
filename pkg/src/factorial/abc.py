import logging
import math
from dataclasses import dataclass
from typing import Iterable, List

from arithmetic import ArithmeticDomainError, factorize, radical


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbcTriple:
    """
    Coprime a + b = c with quality log c / log rad(abc).

    quality > 1 marks an ABC hit.
    """

    a: int
    b: int
    c: int
    rad_abc: int
    quality: float

    @property
    def is_hit(self) -> bool:
        return self.quality > 1


def abc_quality(a: int, b: int) -> AbcTriple:
    if a < 1 or b < 1:
        raise ArithmeticDomainError(f"a and b must be positive, got {a}, {b}")
    if math.gcd(a, b) != 1:
        raise ArithmeticDomainError(f"gcd({a}, {b}) = {math.gcd(a, b)}, inputs must be coprime")
    c = a + b
    # pairwise coprime, so the radical splits
    rad_abc = radical(factorize(a)) * radical(factorize(b)) * radical(factorize(c))
    quality = math.log(c) / math.log(rad_abc) if rad_abc > 1 else math.inf
    return AbcTriple(a=a, b=b, c=c, rad_abc=rad_abc, quality=quality)


@dataclass(frozen=True)
class GapTriple:
    """
    A perfect x and multiperfect y, their gap, and the coprime triple
    y/g + (x - y)/g = x/g with g = gcd(x, y) (roles swapped when y > x).
    """

    x: int
    y: int
    gap: int
    triple: AbcTriple

    @property
    def odd_gap(self) -> bool:
        return self.gap % 2 == 1


def gap_triples(perfects: Iterable[int], multiperfects: Iterable[int]) -> List[GapTriple]:
    """
    One GapTriple per pair of a perfect x and a distinct multiperfect y,
    ordered by (x, y).
    """
    multiperfects = sorted(set(multiperfects))
    rows = []
    for x in sorted(set(perfects)):
        for y in multiperfects:
            if y == x:
                continue
            g = math.gcd(x, y)
            small, large = min(x, y) // g, max(x, y) // g
            triple = abc_quality(small, large - small)
            rows.append(GapTriple(x=x, y=y, gap=abs(x - y), triple=triple))
    logger.info("%d gap triples, %d with odd gap, %d ABC hits",
                len(rows), sum(r.odd_gap for r in rows), sum(r.triple.is_hit for r in rows))
    return rows
