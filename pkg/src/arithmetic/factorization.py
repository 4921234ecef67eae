import logging
import random
import re
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import gmpy2

from arithmetic.errors import ArithmeticDomainError, IncompleteFactorization
from arithmetic.primes import is_prime, small_primes
from config.settings import ToolkitSettings, load_settings


logger = logging.getLogger(__name__)

FACTOR_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class Factorization:
    """
    Canonical factored form p_1^e_1 * ... * p_r^e_r of a positive integer.

    entries are (prime, exponent) pairs with strictly increasing primes and
    exponents >= 1. The empty tuple is the factorization of 1.
    """

    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        self._check_shape()
        for p, _ in self.entries:
            if not is_prime(p):
                raise ArithmeticDomainError(f"{p} is not prime")

    def _check_shape(self):
        previous = 1
        for p, e in self.entries:
            if p <= previous or e < 1:
                raise ArithmeticDomainError(f"non-canonical factorization entries {self.entries}")
            previous = p

    @classmethod
    def _unchecked(cls, entries: Tuple[Tuple[int, int], ...]) -> 'Factorization':
        # primes already proven by the caller; ordering is still enforced
        f = object.__new__(cls)
        object.__setattr__(f, 'entries', entries)
        f._check_shape()
        return f

    @classmethod
    def from_mapping(cls, exponents: Dict[int, int], verify: bool = True) -> 'Factorization':
        """
        Build from {prime: exponent}; zero exponents are dropped.

        verify=False skips the primality pass for primes the caller has
        already proven (sieve output, factorize results).
        """
        entries = tuple(sorted((int(p), int(e)) for p, e in exponents.items() if e > 0))
        return cls(entries) if verify else cls._unchecked(entries)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], verify: bool = True) -> 'Factorization':
        """
        Build from (prime, exponent) pairs in any order; repeated primes merge.

        With verify=True every prime is checked with is_prime.
        """
        merged: Dict[int, int] = {}
        for p, e in pairs:
            if e < 1:
                raise ArithmeticDomainError(f"exponent of {p} must be positive, got {e}")
            merged[p] = merged.get(p, 0) + e
        return cls.from_mapping(merged, verify=verify)

    @classmethod
    def parse(cls, text: str) -> 'Factorization':
        """Parse '2^3 * 3 * 5' (the database grammar's factor list)"""
        pairs = []
        for token in text.split('*'):
            match = FACTOR_TOKEN.match(token)
            if not match:
                raise ArithmeticDomainError(f"bad factor token {token.strip()!r}")
            pairs.append((int(match.group(1)), int(match.group(2) or 1)))
        return cls.from_pairs(pairs)

    @property
    def value(self) -> int:
        result = gmpy2.mpz(1)
        for p, e in self.entries:
            result *= gmpy2.mpz(p) ** e
        return int(result)

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.entries]

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def __mul__(self, other: 'Factorization') -> 'Factorization':
        merged = self.as_dict()
        for p, e in other.entries:
            merged[p] = merged.get(p, 0) + e
        return Factorization.from_mapping(merged, verify=False)

    def __len__(self):
        return len(self.entries)

    def format(self) -> str:
        """Render in the database grammar, e.g. '2^5 * 3^3 * 5 * 7'; 1 renders as '1'"""
        if not self.entries:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.entries)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class PartialFactorization:
    """Result of an effort-capped factoring attempt"""

    n: int
    known: Factorization
    cofactor: int  # 1 when complete, otherwise a composite with no factor found

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def require(self) -> Factorization:
        if not self.complete:
            raise IncompleteFactorization(self.n, self.known, self.cofactor)
        return self.known


class _Budget:
    """Shared stopwatch and rho-iteration allowance for one factorize call"""

    def __init__(self, seconds: float, iterations: int):
        self.deadline = time.monotonic() + seconds
        self.iterations = iterations

    def spend(self, count: int) -> bool:
        self.iterations -= count
        return self.iterations > 0 and time.monotonic() < self.deadline


def _brent_rho(n: int, budget: _Budget, rng: random.Random) -> Optional[int]:
    """
    One nontrivial factor of the odd composite n, or None when the budget runs out.

    Brent's cycle detection with batched gcds; restarts with a new
    polynomial constant when a round collapses to n.
    """
    n_mpz = gmpy2.mpz(n)
    batch = 128
    while True:
        y = gmpy2.mpz(rng.randrange(1, n))
        c = gmpy2.mpz(rng.randrange(1, n))
        g, r, q = 1, 1, gmpy2.mpz(1)
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n_mpz
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(batch, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n_mpz
                    q = q * abs(x - y) % n_mpz
                g = gmpy2.gcd(q, n_mpz)
                k += steps
                if not budget.spend(steps):
                    return None
            r *= 2
        if g == n_mpz:
            # backtrack one step at a time from the last saved point
            while True:
                ys = (ys * ys + c) % n_mpz
                g = gmpy2.gcd(abs(x - ys), n_mpz)
                if g > 1:
                    break
        if g != n_mpz:
            return int(g)
        if not budget.spend(1):
            return None


def _perfect_power(m: int) -> Optional[Tuple[int, int]]:
    """(base, k) with base**k == m and k >= 2, or None"""
    m_mpz = gmpy2.mpz(m)
    if not gmpy2.is_power(m_mpz):
        return None
    for k in range(2, m.bit_length() + 1):
        root, exact = gmpy2.iroot(m_mpz, k)
        if exact:
            return int(root), k
    return None


def try_factorize(
    n: int,
    effort_seconds: Optional[float] = None,
    rho_iterations: Optional[int] = None,
    settings: Optional[ToolkitSettings] = None,
    seed: Optional[int] = None,
) -> PartialFactorization:
    """
    Factor n as far as the effort cap allows.

    Parameters:
    - n: positive integer
    - effort_seconds / rho_iterations: caps; default from settings
    - seed: seed for this call's rho RNG (the result never depends on it)
    """
    if n < 1:
        raise ArithmeticDomainError(f"cannot factorize {n}: input must be a positive integer")
    settings = settings or load_settings()
    budget = _Budget(
        effort_seconds if effort_seconds is not None else settings.effort_cap_seconds,
        rho_iterations if rho_iterations is not None else settings.rho_iterations,
    )
    rng = random.Random(seed)

    found: Dict[int, int] = {}
    remaining = n
    for p in small_primes(settings.trial_division_bound):
        if p * p > remaining:
            break
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            found[p] = e
    else:
        logger.debug("trial division exhausted below %d, cofactor %d", settings.trial_division_bound, remaining)

    stuck = 1
    pending = [remaining] if remaining > 1 else []
    while pending:
        m = pending.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        power = _perfect_power(m)
        if power is not None:
            base, k = power
            pending.extend([base] * k)
            continue
        d = _brent_rho(m, budget, rng)
        if d is None:
            logger.info("effort cap reached factoring %d-digit cofactor of %d", len(str(m)), n)
            stuck *= m
            continue
        pending.extend([d, m // d])

    return PartialFactorization(n=n, known=Factorization.from_mapping(found, verify=False), cofactor=stuck)


def factorize(n: int, **effort) -> Factorization:
    """
    Canonical factorization of n.

    Raises IncompleteFactorization (with the partial result and the composite
    cofactor) when the effort cap is hit.
    """
    return try_factorize(n, **effort).require()
