import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from arithmetic import (
    ArithmeticDomainError,
    Factorization,
    abundancy,
    is_prime,
    omega,
    primes_up_to,
    sigma_prime_power,
    valuation,
)
from config.settings import load_settings


logger = logging.getLogger(__name__)

PROOF = "proof"
STATEMENT = "statement"
B_VARIANTS = (PROOF, STATEMENT)

# upper chains for p1*p2*p3^2*p4^2 (and *p5^2) with distinct odd primes
MIXED_SQUARE_CHAIN = {
    4: Fraction(4, 3) * Fraction(6, 5) * Fraction(31, 25) * Fraction(57, 49),
}
MIXED_SQUARE_CHAIN[5] = MIXED_SQUARE_CHAIN[4] * Fraction(133, 121)

MAX_CHAIN_LENGTH = 5
MAX_CHAIN_FACTOR = 6


def two_adic_sigma_identity(p: int, e: int) -> Tuple[int, int]:
    """
    Both sides of nu_2(sigma(p^e)) = nu_2(e+1) + nu_2(p+1) - 1.

    Only odd primes p and odd e are in scope.
    """
    if p == 2 or not is_prime(p):
        raise ArithmeticDomainError(f"{p} is not an odd prime")
    if e < 1 or e % 2 == 0:
        raise ArithmeticDomainError(f"exponent must be odd and positive, got {e}")
    lhs = valuation(sigma_prime_power(p, e), 2)
    rhs = valuation(e + 1, 2) + valuation(p + 1, 2) - 1
    return lhs, rhs


def two_adic_identity_scan(p_limit: int, e_max: int) -> List[Tuple[int, int, int, int]]:
    """(p, e, lhs, rhs) for every odd prime p < p_limit and odd e <= e_max where the sides differ"""
    failures = []
    for p in primes_up_to(p_limit - 1)[1:]:
        for e in range(1, e_max + 1, 2):
            lhs, rhs = two_adic_sigma_identity(int(p), e)
            if lhs != rhs:
                failures.append((int(p), e, lhs, rhs))
    logger.info("2-adic identity: %d failures for p < %d, e <= %d", len(failures), p_limit, e_max)
    return failures


def _require_distinct_odd_primes(primes: Sequence[int]):
    if len(set(primes)) != len(primes):
        raise ArithmeticDomainError(f"primes must be distinct, got {tuple(primes)}")
    for p in primes:
        if p == 2 or not is_prime(p):
            raise ArithmeticDomainError(f"{p} is not an odd prime")


def mixed_square_abundancy(primes: Sequence[int]) -> Fraction:
    """
    Abundancy of p1 * p2 * p3^2 * p4^2 (* p5^2) for distinct odd primes,
    the first two taken to the first power and the rest squared.
    """
    if len(primes) not in MIXED_SQUARE_CHAIN:
        raise ArithmeticDomainError(f"expected 4 or 5 primes, got {len(primes)}")
    _require_distinct_odd_primes(primes)
    pairs = [(p, 1) for p in primes[:2]] + [(p, 2) for p in primes[2:]]
    return abundancy(Factorization.from_pairs(pairs, verify=False))


def product_bound_trials(shape: int, count: int, seed: int = 0,
                         prime_limit: int = 1000) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """
    Random distinct odd prime tuples of the given shape (4 or 5 primes).

    Returns the tuples whose abundancy reaches the chain bound or 4;
    an empty list means every trial satisfied both.
    """
    if shape not in MIXED_SQUARE_CHAIN:
        raise ArithmeticDomainError(f"shape must be 4 or 5, got {shape}")
    pool = [int(p) for p in primes_up_to(prime_limit)[1:]]
    rng = random.Random(seed)
    chain = MIXED_SQUARE_CHAIN[shape]
    violations = []
    largest = Fraction(0)
    for _ in range(count):
        primes = tuple(rng.sample(pool, shape))
        ratio = mixed_square_abundancy(primes)
        largest = max(largest, ratio)
        if ratio >= chain or ratio >= 4:
            violations.append((primes, ratio))
    logger.info("%d-prime trials: largest abundancy %.4f, chain %.4f", shape, float(largest), float(chain))
    return violations


def odd_chain_bound(r: int) -> Fraction:
    """(5/4)^(r-3) * (3/2)(7/6)(11/10)"""
    return Fraction(5, 4) ** (r - 3) * Fraction(3, 2) * Fraction(7, 6) * Fraction(11, 10)


def _require_odd_with_four_primes(f: Factorization):
    if 2 in f.primes:
        raise ArithmeticDomainError(f"{f} is even")
    if omega(f) < 4:
        raise ArithmeticDomainError(f"{f} has {omega(f)} distinct primes, need at least 4")


def odd_chain_bound_holds(f: Factorization) -> bool:
    _require_odd_with_four_primes(f)
    return abundancy(f) < odd_chain_bound(omega(f))


def odd_valuation_bound(k: int, f: Factorization) -> bool:
    """nu_2(k) < r/3 for an odd m with r >= 4 distinct primes"""
    _require_odd_with_four_primes(f)
    return 3 * valuation(k, 2) < omega(f)


def largest_admissible_power(f: Factorization) -> int:
    """Largest n with 2^n <= sigma(m)/m, i.e. the biggest nu_2(k) an abundancy this size allows"""
    ratio = abundancy(f)
    return (ratio.numerator // ratio.denominator).bit_length() - 1


def odd_chain_trials(count: int, seed: int = 0, prime_limit: int = 1000,
                     max_exponent: int = 12, max_r: int = 8) -> List[Factorization]:
    """
    Random odd factorizations with 4..max_r distinct primes; returns those
    breaking the chain bound, the (5/4)^r bound or the valuation bound.
    """
    pool = [int(p) for p in primes_up_to(prime_limit)[1:]]
    rng = random.Random(seed)
    violations = []
    for _ in range(count):
        r = rng.randint(4, max_r)
        primes = rng.sample(pool, r)
        f = Factorization.from_pairs([(p, rng.randint(1, max_exponent)) for p in primes], verify=False)
        n = largest_admissible_power(f)
        if not (odd_chain_bound_holds(f)
                and abundancy(f) < Fraction(5, 4) ** r
                and odd_valuation_bound(2 ** n, f)):
            violations.append(f)
    logger.info("odd chain trials: %d of %d violate", len(violations), count)
    return violations


@dataclass(frozen=True)
class LoopyInstance:
    """
    A chain k_1, ..., k_e with A = k_1...k_e and a candidate prime p_y.

    The proof expansion B = sum_{i=1..e} prod_{j>i} k_j gives
    B/A = sum_i 1/(k_1...k_i); the statement drops the final 1.
    """

    e: int
    ks: Tuple[int, ...]
    p_y: int

    def __post_init__(self):
        if self.e < 1 or len(self.ks) != self.e:
            raise ArithmeticDomainError(f"need e >= 1 factors, got e={self.e}, ks={self.ks}")
        if any(k < 2 for k in self.ks):
            raise ArithmeticDomainError(f"every k_i must be at least 2, got {self.ks}")
        if self.p_y < 1:
            raise ArithmeticDomainError(f"p_y must be positive, got {self.p_y}")

    @property
    def A(self) -> int:
        result = 1
        for k in self.ks:
            result *= k
        return result

    @property
    def B(self) -> int:
        total, tail = 0, 1
        for k in reversed(self.ks):
            total += tail
            tail *= k
        return total

    @property
    def B_statement(self) -> int:
        return self.B - 1

    def b(self, variant: str = PROOF) -> int:
        if variant == PROOF:
            return self.B
        if variant == STATEMENT:
            return self.B_statement
        raise ArithmeticDomainError(f"unknown B variant {variant!r}")

    @property
    def threshold(self) -> int:
        return 3 * 2 ** self.e


def chain_divisibility(inst: LoopyInstance, variant: str = PROOF) -> bool:
    """True iff A*p_y - B divides p_y^2 + p_y + 1"""
    divisor = inst.A * inst.p_y - inst.b(variant)
    if divisor <= 0:
        raise ArithmeticDomainError(f"A*p_y - B = {divisor} is not positive for {inst}")
    p = inst.p_y
    return (p * p + p + 1) % divisor == 0


def _chain_hits(task: Tuple[int, Tuple[int, ...], int, int, str]) -> List[int]:
    """Worker: the p_y in [lo, hi] where one chain satisfies the divisibility"""
    e, ks, lo, hi, variant = task
    return [p for p in range(lo, hi + 1)
            if chain_divisibility(LoopyInstance(e, ks, p), variant)]


def _chain_tasks(e_max: int, k_max: int, span, variant: str):
    if e_max < 1 or k_max < 2:
        raise ArithmeticDomainError(f"need e_max >= 1 and k_max >= 2, got {e_max}, {k_max}")
    if e_max > MAX_CHAIN_LENGTH or k_max > MAX_CHAIN_FACTOR:
        raise ArithmeticDomainError(
            f"scan limited to e_max <= {MAX_CHAIN_LENGTH}, k_max <= {MAX_CHAIN_FACTOR}"
        )
    if variant not in B_VARIANTS:
        raise ArithmeticDomainError(f"unknown B variant {variant!r}")
    tasks = []
    for e in range(1, e_max + 1):
        lo, hi = span(e)
        for ks in itertools.product(range(2, k_max + 1), repeat=e):
            tasks.append((e, ks, lo, hi, variant))
    return tasks


def _run_chain_tasks(tasks, workers: Optional[int], progress: bool) -> List[LoopyInstance]:
    workers = workers or load_settings().workers
    if workers == 1 or len(tasks) < 2:
        results = [_chain_hits(t) for t in tqdm(tasks, disable=not progress, unit="chain")]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(tqdm(executor.map(_chain_hits, tasks, chunksize=64),
                                total=len(tasks), disable=not progress, unit="chain"))
    found = []
    for (e, ks, _, _, _), hits in zip(tasks, results):
        found.extend(LoopyInstance(e, ks, p) for p in hits)
    return found


def chain_divisibility_scan(e_max: int, k_max: int, p_margin: int, variant: str = PROOF,
                            workers: Optional[int] = None,
                            progress: bool = False) -> List[LoopyInstance]:
    """
    Every chain with e <= e_max, 2 <= k_i <= k_max and
    3*2^e <= p_y <= 3*2^e + p_margin where the divisibility holds.

    Output order is (e, ks, p_y) whatever the worker count.
    """
    if p_margin < 0:
        raise ArithmeticDomainError(f"p_margin must be non-negative, got {p_margin}")
    tasks = _chain_tasks(e_max, k_max, lambda e: (3 * 2 ** e, 3 * 2 ** e + p_margin), variant)
    found = _run_chain_tasks(tasks, workers, progress)
    logger.info("chain scan (%s B): %d instances, %d counterexamples", variant, len(tasks), len(found))
    return found


def threshold_gap(e_max: int, k_max: int, variant: str = PROOF,
                  workers: Optional[int] = None) -> List[LoopyInstance]:
    """Chains where the divisibility holds at p_y = 3*2^e - 2 or 3*2^e - 1"""
    tasks = _chain_tasks(e_max, k_max, lambda e: (3 * 2 ** e - 2, 3 * 2 ** e - 1), variant)
    return _run_chain_tasks(tasks, workers, progress=False)
