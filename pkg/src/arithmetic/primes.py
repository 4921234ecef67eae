import math
from functools import lru_cache

import gmpy2
import numpy as np


# Deterministic Miller-Rabin: the first 13 primes as bases are exact below this bound
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (Eratosthenes on a numpy mask)"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


@lru_cache(maxsize=4)
def small_primes(limit: int) -> tuple:
    """Cached tuple of python ints, used for trial division"""
    return tuple(int(p) for p in primes_up_to(limit))


def is_prime(n: int) -> bool:
    """
    Deterministic primality test.

    Miller-Rabin with fixed bases is exact below MR_DETERMINISTIC_LIMIT;
    above it we use gmpy2's strong BPSW test, which has no known
    counterexample.
    """
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    if n < MR_DETERMINISTIC_LIMIT:
        return all(gmpy2.is_strong_prp(n, a) for a in MR_BASES)
    return bool(gmpy2.is_strong_bpsw_prp(n))


def primorial(n: int) -> int:
    """Product of all primes <= n; equals rad(n!)"""
    result = gmpy2.mpz(1)
    for p in small_primes(max(n, 2)):
        if p > n:
            break
        result *= p
    return int(result)
