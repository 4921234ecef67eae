import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import gmpy2
from sympy.ntheory import n_order

from arithmetic import (
    ArithmeticDomainError,
    Factorization,
    IncompleteFactorization,
    abundancy,
    factorize,
    is_prime,
    omega,
    primes_up_to,
)


logger = logging.getLogger(__name__)

MULTIPERFECT = "multiperfect"
UNDETERMINED = "undetermined"


def lucas_u(g: int, n: int) -> int:
    """Base-g repunit U_n = (g^n - 1)/(g - 1)"""
    if g < 2:
        raise ArithmeticDomainError(f"base must be at least 2, got {g}")
    if n < 1:
        raise ArithmeticDomainError(f"repunit length must be positive, got {n}")
    return int((gmpy2.mpz(g) ** n - 1) // (g - 1))


@dataclass(frozen=True)
class RepunitSpec:
    g: int
    n: int

    @property
    def value(self) -> int:
        return lucas_u(self.g, self.n)


@dataclass(frozen=True)
class MultirepdigitSpec:
    """D * U_n; a classic repdigit when D is a single base-g digit"""

    base: RepunitSpec
    D: int

    def __post_init__(self):
        if self.D < 1:
            raise ArithmeticDomainError(f"D must be positive, got {self.D}")

    @property
    def value(self) -> int:
        return self.D * self.base.value

    @property
    def is_repdigit(self) -> bool:
        return self.D <= self.base.g - 1


def factorize_repunit(g: int, n: int, **effort) -> Factorization:
    """
    Factor U_n, splitting U_2j = U_j * (g^j + 1) before any generic factoring.

    Raises IncompleteFactorization when a piece exceeds the effort cap.
    """
    if n % 2 == 0:
        half = n // 2
        return factorize_repunit(g, half, **effort) * factorize(g ** half + 1, **effort)
    return factorize(lucas_u(g, n), **effort)


@dataclass(frozen=True)
class RatioChain:
    """sigma(U_{2^s})/U_{2^s} for s = 0, 1, ...; truncated_at is the first s that could not be factored"""

    g: int
    ratios: Tuple[Fraction, ...]
    truncated_at: Optional[int] = None

    @property
    def strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.ratios, self.ratios[1:]))


def repunit_power_of_two_factorizations(g: int, s_max: int, **effort):
    """
    Yield (s, factorization of U_{2^s}) for s = 0..s_max.

    Each step multiplies in g^(2^(s-1)) + 1, so every level reuses the last.
    IncompleteFactorization propagates from the level that hits the cap.
    """
    current = Factorization()
    yield 0, current
    for s in range(1, s_max + 1):
        current = current * factorize(g ** (2 ** (s - 1)) + 1, **effort)
        yield s, current


def sigma_ratio_chain(g: int, s_max: int, **effort) -> RatioChain:
    if g < 2:
        raise ArithmeticDomainError(f"base must be at least 2, got {g}")
    if s_max < 0:
        raise ArithmeticDomainError(f"s_max must be non-negative, got {s_max}")
    ratios = []
    try:
        for _, f in repunit_power_of_two_factorizations(g, s_max, **effort):
            ratios.append(abundancy(f))
    except IncompleteFactorization as exc:
        logger.warning("base %d: chain truncated at s=%d (cofactor %d unfactored)",
                       g, len(ratios), exc.cofactor)
        return RatioChain(g=g, ratios=tuple(ratios), truncated_at=len(ratios))
    return RatioChain(g=g, ratios=tuple(ratios))


def rank_of_apparition(p: int, g: int) -> int:
    """
    Smallest n >= 1 with p | U_n.

    When p | g - 1 every U_n is n mod p, so the rank is p itself;
    otherwise it is the multiplicative order of g mod p.
    """
    if not is_prime(p):
        raise ArithmeticDomainError(f"{p} is not prime")
    if g < 2:
        raise ArithmeticDomainError(f"base must be at least 2, got {g}")
    if g % p == 0:
        raise ArithmeticDomainError(f"{p} divides the base {g}")
    if (g - 1) % p == 0:
        return p
    return int(n_order(g, p))


def rank_divides_p_minus_one(p: int, g: int) -> Optional[bool]:
    """z(p) | p - 1 for p not dividing g(g-1); None when p | g - 1"""
    if (g - 1) % p == 0:
        return None
    return (p - 1) % rank_of_apparition(p, g) == 0


def reciprocal_prime_sum(f: Factorization) -> Fraction:
    """sum of 1/(p-1) over the primes of f"""
    return sum((Fraction(1, p - 1) for p in f.primes), Fraction(0))


@dataclass(frozen=True)
class GrowthRecord:
    g: int
    m: int
    ratio: Fraction
    log_ratio: float
    bound_term: float
    quotient: float
    reciprocal_prime_sum: Fraction
    within_exp_bound: bool


def _log_fraction(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def repunit_abundancy_growth(g: int, m: int, **effort) -> GrowthRecord:
    """
    log(sigma(U_m)/U_m) against (log(e * omega(m)))^2 = (1 + log omega(m))^2.

    Also checks sigma(U_m)/U_m <= exp(sum over p | U_m of 1/(p-1)).
    """
    if m < 2:
        raise ArithmeticDomainError(f"index must be at least 2, got {m}")
    f = factorize_repunit(g, m, **effort)
    ratio = abundancy(f)
    log_ratio = _log_fraction(ratio)
    bound_term = (1 + math.log(omega(factorize(m)))) ** 2
    reciprocal = reciprocal_prime_sum(f)
    return GrowthRecord(
        g=g,
        m=m,
        ratio=ratio,
        log_ratio=log_ratio,
        bound_term=bound_term,
        quotient=log_ratio / bound_term,
        reciprocal_prime_sum=reciprocal,
        within_exp_bound=log_ratio <= float(reciprocal),
    )


@dataclass(frozen=True, order=True)
class MultirepdigitHit:
    s: int
    D: int
    k: Optional[int]
    status: str

    @property
    def power_of_two(self) -> bool:
        return self.k is not None and self.k & (self.k - 1) == 0


def scan_multirepdigit_multiperfect(g: int, D_max: int, s_max: int, **effort) -> List[MultirepdigitHit]:
    """
    Every D * U_{2^s} with 1 <= s <= s_max and D <= D_max that is multiperfect.

    s starts at 1 because every integer is D * U_1. A length whose repunit
    cannot be factored gives one 'undetermined' row per D. Rows are in
    (s, D) order.
    """
    if g < 2 or D_max < 1 or s_max < 1:
        raise ArithmeticDomainError(f"need g >= 2, D_max >= 1, s_max >= 1; got {g}, {D_max}, {s_max}")
    d_factors: Dict[int, Factorization] = {D: factorize(D) for D in range(1, D_max + 1)}

    hits = []
    levels = repunit_power_of_two_factorizations(g, s_max, **effort)
    next(levels)  # s = 0
    s = 0
    try:
        for s, u in levels:
            for D, fd in d_factors.items():
                ratio = abundancy(fd * u)
                if ratio.denominator == 1 and ratio.numerator >= 2:
                    hits.append(MultirepdigitHit(s=s, D=D, k=ratio.numerator, status=MULTIPERFECT))
    except IncompleteFactorization:
        logger.warning("base %d: U_%d not factored, lengths from 2^%d on undetermined", g, 2 ** (s + 1), s + 1)
        for rest in range(s + 1, s_max + 1):
            hits.extend(MultirepdigitHit(s=rest, D=D, k=None, status=UNDETERMINED) for D in d_factors)

    logger.info("base %d: %d multiperfect multirepdigits for D <= %d, s <= %d",
                g, sum(h.status == MULTIPERFECT for h in hits), D_max, s_max)
    return hits


def submultiplicative(D: int, U: int) -> Tuple[Fraction, Fraction, bool]:
    """(sigma(DU)/DU, sigma(D)/D * sigma(U)/U, whether they are equal)"""
    fd, fu = factorize(D), factorize(U)
    lhs = abundancy(fd * fu)
    rhs = abundancy(fd) * abundancy(fu)
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class PrimeSetIdentity:
    """
    Both sides of sum over n in P* of Omega(n)/n = (sum 1/(p-1)) * prod p/(p-1)
    for a finite prime set P, with the left side summed over exponents <= height.
    """

    primes: Tuple[int, ...]
    height: int
    box_sum: Fraction
    closed_form: Fraction
    tail_bound: Fraction
    log_box_sum: float
    log_closed_form: float

    @property
    def holds(self) -> bool:
        gap = self.closed_form - self.box_sum
        return 0 <= gap <= self.tail_bound


def prime_set_identity(k: int, height: int) -> PrimeSetIdentity:
    """
    Check the identity for the first k primes (k <= 6).

    The truncated sum misses only terms with some exponent above height;
    grouping those by prime bounds the gap by
    sum_p p^-(height+1) * (closed_form + (height+1) * prod p/(p-1)).
    The float companion uses weights log n in place of Omega(n).
    """
    if not 1 <= k <= 6:
        raise ArithmeticDomainError(f"k must lie in [1, 6], got {k}")
    if height < 1:
        raise ArithmeticDomainError(f"height must be positive, got {height}")
    primes = tuple(int(p) for p in primes_up_to(20)[:k])

    geometric = {p: sum((Fraction(1, p ** a) for a in range(height + 1)), Fraction(0)) for p in primes}
    weighted = {p: sum((Fraction(a, p ** a) for a in range(height + 1)), Fraction(0)) for p in primes}
    euler = {p: Fraction(p, p - 1) for p in primes}

    def product_except(values, skip):
        result = Fraction(1)
        for q in primes:
            if q != skip:
                result *= values[q]
        return result

    box_sum = sum((weighted[p] * product_except(geometric, p) for p in primes), Fraction(0))
    full_product = product_except(euler, None)
    closed_form = sum((Fraction(1, p - 1) for p in primes), Fraction(0)) * full_product
    tail_bound = sum((Fraction(1, p ** (height + 1)) * (closed_form + (height + 1) * full_product)
                      for p in primes), Fraction(0))

    log_box = sum(math.log(p) * float(weighted[p] * product_except(geometric, p)) for p in primes)
    log_closed = float(full_product) * sum(math.log(p) / (p - 1) for p in primes)

    return PrimeSetIdentity(
        primes=primes,
        height=height,
        box_sum=box_sum,
        closed_form=closed_form,
        tail_bound=tail_bound,
        log_box_sum=log_box,
        log_closed_form=log_closed,
    )
