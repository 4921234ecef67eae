import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from arithmetic import ArithmeticDomainError, is_squarefree, radical, valuation
from ingest.records import MultiperfectRecord


logger = logging.getLogger(__name__)

HOLDS = "holds"
VIOLATED = "violated"
BOUNDARY = "boundary"

# rad(m) < 2 * m^beta, proven for every perfect m
CLASSICAL_PERFECT_EXPONENTS = {
    '17/26': Fraction(17, 26),
    '2/3': Fraction(2, 3),
    '9/14': Fraction(9, 14),
}


@dataclass(frozen=True)
class BoundClass:
    """
    Which radical bound applies to sigma(m) = k*m.

    k = 2^n * t with t odd; alpha = nu_2(m), zero exactly when m is odd.
    """

    parity_of_m: str
    n: int
    alpha: int
    t: int

    @property
    def m_is_even(self) -> bool:
        return self.parity_of_m == 'even'


@dataclass(frozen=True)
class BoundReport:
    record: MultiperfectRecord
    beta_num: int
    beta_den: int
    rad_m: int
    holds: bool
    strict: bool
    verdict: str

    @property
    def beta(self) -> Fraction:
        return Fraction(self.beta_num, self.beta_den)

    @property
    def log_ratio(self) -> float:
        """log rad(m) / log m, for reporting only"""
        value = self.record.value
        return math.log(self.rad_m) / math.log(value) if value > 1 else 1.0


def classify_pair(m: int, k: int) -> BoundClass:
    """Classification from the raw pair; also used for synthetic odd cases"""
    if m < 1 or k < 1:
        raise ArithmeticDomainError(f"cannot classify m={m}, k={k}")
    n = valuation(k, 2)
    alpha = valuation(m, 2)
    return BoundClass(
        parity_of_m='even' if alpha else 'odd',
        n=n,
        alpha=alpha,
        t=k >> n,
    )


def classify(record: MultiperfectRecord) -> BoundClass:
    return classify_pair(record.value, record.k)


def bound_exponent(cls: BoundClass) -> Fraction:
    """
    beta with rad(m) < m^beta (or <= for odd m with odd k).

    odd m:  k odd -> 1/2, k = 2 mod 4 -> 9/14, 4 | k -> (4n+1)/(4n+4)
    even m: (2n+2alpha+1)/(2n+2alpha+2)
    """
    if cls.m_is_even:
        s = cls.n + cls.alpha
        return Fraction(2 * s + 1, 2 * s + 2)
    if cls.n == 0:
        return Fraction(1, 2)
    if cls.n == 1:
        return Fraction(9, 14)
    return Fraction(4 * cls.n + 1, 4 * cls.n + 4)


def bound_is_strict(cls: BoundClass) -> bool:
    """Only the odd-m, odd-k square-root bound is non-strict"""
    return cls.m_is_even or cls.n > 0


def radical_power_compare(rad_m: int, value: int, beta: Fraction, strict: bool, scale: int = 1) -> bool:
    """Exact test of rad < scale * value^beta via rad^q vs scale^q * value^p"""
    p, q = beta.numerator, beta.denominator
    lhs = rad_m ** q
    rhs = scale ** q * value ** p
    return lhs < rhs if strict else lhs <= rhs


def check_bound(record: MultiperfectRecord, min_m: int = 1) -> BoundReport:
    """
    Compare rad(m)^q with m^p in exact integers for beta = p/q.

    A failed comparison is a 'boundary' verdict when m is squarefree
    (rad(m) = m can never sit below m^beta) or m < min_m.
    """
    cls = classify(record)
    beta = bound_exponent(cls)
    strict = bound_is_strict(cls)
    rad_m = radical(record.m)
    holds = radical_power_compare(rad_m, record.value, beta, strict)

    if holds:
        verdict = HOLDS
    elif is_squarefree(record.m) or record.value < min_m:
        verdict = BOUNDARY
    else:
        verdict = VIOLATED
        logger.warning("radical bound violated for m=%d (k=%d)", record.value, record.k)

    return BoundReport(
        record=record,
        beta_num=beta.numerator,
        beta_den=beta.denominator,
        rad_m=rad_m,
        holds=holds,
        strict=strict,
        verdict=verdict,
    )


def verify_database(records: List[MultiperfectRecord], min_m: int = 1) -> List[BoundReport]:
    reports = [check_bound(record, min_m=min_m) for record in records]
    counts = {}
    for report in reports:
        counts[report.verdict] = counts.get(report.verdict, 0) + 1
    logger.info("Bound verification: %s", counts)
    return reports


def classical_perfect_bounds(record: MultiperfectRecord) -> Dict[str, object]:
    """
    The older perfect-number bounds rad(m) < 2*m^beta, checked exactly.

    Also reports rad(m)/sqrt(m), the quantity the square-root conjecture
    is about.
    """
    if record.k != 2:
        raise ArithmeticDomainError(f"m={record.value} is {record.k}-perfect, not perfect")
    rad_m = radical(record.m)
    value = record.value
    result: Dict[str, object] = {
        name: radical_power_compare(rad_m, value, beta, strict=True, scale=2)
        for name, beta in CLASSICAL_PERFECT_EXPONENTS.items()
    }
    result['sqrt_ratio'] = math.exp(math.log(rad_m) - 0.5 * math.log(value))
    return result


def finiteness_degree_threshold(n: int, homogeneous: bool = False) -> int:
    """
    Degree above which a squarefree polynomial (or homogeneous form) can
    take only finitely many odd k-perfect values, n = nu_2(k) >= 2,
    assuming the ABC conjecture.
    """
    if n < 2:
        raise ArithmeticDomainError(f"threshold needs nu_2(k) >= 2, got {n}")
    base = (4 * n + 4) // 3
    return 2 * base if homogeneous else base

