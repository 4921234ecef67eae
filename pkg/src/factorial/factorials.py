import enum
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from arithmetic import (
    ArithmeticDomainError,
    Factorization,
    abundancy,
    is_prime,
    primes_up_to,
    primorial,
    try_factorize,
)
from config.settings import load_settings


logger = logging.getLogger(__name__)


def legendre_exponent(n: int, p: int) -> int:
    """nu_p(n!) = sum_j floor(n / p^j)"""
    total, power = 0, p
    while power <= n:
        total += n // power
        power *= p
    return total


def factorial_factorization(n: int) -> Factorization:
    if n < 0:
        raise ArithmeticDomainError(f"factorial of negative {n}")
    return Factorization.from_mapping({int(p): legendre_exponent(n, int(p)) for p in primes_up_to(n)}, verify=False)


def _check_cap(n: int, cap: Optional[int]) -> int:
    cap = cap if cap is not None else load_settings().factorial_cap
    if n > cap:
        raise ArithmeticDomainError(f"n={n} exceeds the factorial cap {cap}")
    return cap


def factorial_abundancy(n: int, cap: Optional[int] = None) -> Fraction:
    """sigma(n!)/n! from the Legendre factorization of n!"""
    if n < 1:
        raise ArithmeticDomainError(f"n must be positive, got {n}")
    _check_cap(n, cap)
    return abundancy(factorial_factorization(n))


def multiperfect_factorials(N: int, cap: Optional[int] = None) -> Dict[int, List[int]]:
    """k -> every n <= N with n! k-perfect"""
    _check_cap(N, cap)
    found: Dict[int, List[int]] = {}
    for n in range(1, N + 1):
        ratio = factorial_abundancy(n, cap)
        if ratio.denominator == 1 and ratio.numerator >= 2:
            found.setdefault(ratio.numerator, []).append(n)
    return found


def perfect_factorials(N: int, cap: Optional[int] = None) -> List[int]:
    """All n <= N with n! perfect"""
    return multiperfect_factorials(N, cap).get(2, [])


def factorial_abundancy_increasing(N: int, cap: Optional[int] = None) -> bool:
    """
    True iff sigma(n!)/n! strictly increases on 2..N, so each k has at
    most one k-perfect factorial in range.
    """
    if N < 2:
        raise ArithmeticDomainError(f"N must be at least 2, got {N}")
    _check_cap(N, cap)
    previous = factorial_abundancy(2, cap)
    for n in range(3, N + 1):
        current = factorial_abundancy(n, cap)
        if current <= previous:
            logger.warning("abundancy of %d! does not exceed that of %d!", n, n - 1)
            return False
        previous = current
    return True


def factorial_radical_exponent(n: int, cap: Optional[int] = None) -> float:
    """log rad(n!) / log n!, with rad(n!) the primorial of n"""
    if n < 2:
        raise ArithmeticDomainError(f"n must be at least 2, got {n}")
    _check_cap(n, cap)
    return math.log(primorial(n)) / math.log(math.factorial(n))


class ShiftedStatus(str, enum.Enum):
    PRIME = "prime"
    NOT_MULTIPERFECT = "not-multiperfect"
    MULTIPERFECT = "multiperfect"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ShiftedFactorialRow:
    """Verdict on n! + 1; factorization is the known part when undetermined"""

    n: int
    value: int
    status: ShiftedStatus
    k: Optional[int] = None
    factorization: Optional[Factorization] = None
    cofactor: int = 1


def _shifted_row(task: Tuple[int, Optional[float], Optional[int]]) -> ShiftedFactorialRow:
    n, effort_seconds, rho_iterations = task
    value = math.factorial(n) + 1
    # sigma(p) = p + 1 < 2p
    if is_prime(value):
        return ShiftedFactorialRow(n=n, value=value, status=ShiftedStatus.PRIME,
                                   factorization=Factorization.from_mapping({value: 1}, verify=False))
    partial = try_factorize(value, effort_seconds=effort_seconds, rho_iterations=rho_iterations)
    if not partial.complete:
        return ShiftedFactorialRow(n=n, value=value, status=ShiftedStatus.UNDETERMINED,
                                   factorization=partial.known, cofactor=partial.cofactor)
    ratio = abundancy(partial.known)
    if ratio.denominator == 1:
        return ShiftedFactorialRow(n=n, value=value, status=ShiftedStatus.MULTIPERFECT,
                                   k=ratio.numerator, factorization=partial.known)
    return ShiftedFactorialRow(n=n, value=value, status=ShiftedStatus.NOT_MULTIPERFECT,
                               factorization=partial.known)


def shifted_factorial_scan(N: int = 25, workers: Optional[int] = None,
                           effort_seconds: Optional[float] = None,
                           rho_iterations: Optional[int] = None,
                           progress: bool = False) -> List[ShiftedFactorialRow]:
    """
    Classify n! + 1 for 0 <= n <= N. Primes are settled before any
    factoring; composites beyond the effort cap come back undetermined.
    """
    if N < 0:
        raise ArithmeticDomainError(f"N must be non-negative, got {N}")
    tasks = [(n, effort_seconds, rho_iterations) for n in range(N + 1)]
    workers = workers or load_settings().workers
    if workers == 1:
        rows = [_shifted_row(t) for t in tqdm(tasks, disable=not progress, unit="n")]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(tqdm(executor.map(_shifted_row, tasks), total=len(tasks),
                             disable=not progress, unit="n"))
    counts: Dict[str, int] = {}
    for row in rows:
        counts[row.status.value] = counts.get(row.status.value, 0) + 1
    logger.info("n! + 1 for n <= %d: %s", N, counts)
    return rows
