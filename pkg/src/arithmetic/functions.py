from fractions import Fraction
from itertools import product
from typing import List

import gmpy2

from arithmetic.errors import ArithmeticDomainError
from arithmetic.factorization import Factorization
from arithmetic.primes import is_prime


# sigma(m)/m and friends are plain Fractions: always reduced, exact, hashable
ExactRatio = Fraction


def sigma_prime_power(p: int, e: int) -> int:
    """1 + p + ... + p^e"""
    return int((gmpy2.mpz(p) ** (e + 1) - 1) // (p - 1))


def sigma(f: Factorization) -> int:
    """Sum of divisors via the product formula over prime powers"""
    result = gmpy2.mpz(1)
    for p, e in f.entries:
        result *= sigma_prime_power(p, e)
    return int(result)


def radical(f: Factorization) -> int:
    """Squarefree kernel: product of the distinct primes"""
    result = gmpy2.mpz(1)
    for p in f.primes:
        result *= p
    return int(result)


def omega(f: Factorization) -> int:
    return len(f.entries)


def abundancy(f: Factorization) -> ExactRatio:
    """sigma(m)/m in lowest terms; integral exactly when m is k-perfect"""
    return Fraction(sigma(f), f.value)


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n"""
    if n < 1:
        raise ArithmeticDomainError(f"valuation needs n >= 1, got {n}")
    if not is_prime(p):
        raise ArithmeticDomainError(f"valuation base {p} is not prime")
    if p == 2:
        return (n & -n).bit_length() - 1
    return int(gmpy2.remove(n, p)[1])


def divisors(f: Factorization) -> List[int]:
    powers = [[p ** i for i in range(e + 1)] for p, e in f.entries]
    result = []
    for combo in product(*powers):
        d = 1
        for x in combo:
            d *= x
        result.append(d)
    return sorted(result)


def reciprocal_divisor_sum(f: Factorization) -> ExactRatio:
    """Sum of 1/d over the divisors d of value(f); equal to abundancy(f)"""
    n = f.value
    return Fraction(sum(n // d for d in divisors(f)), n)


def is_squarefree(f: Factorization) -> bool:
    return all(e == 1 for _, e in f.entries)


def is_squarefull(f: Factorization) -> bool:
    return all(e >= 2 for _, e in f.entries)
