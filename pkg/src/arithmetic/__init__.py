from .errors import (
    MplabError,
    ArithmeticDomainError,
    IncompleteFactorization,
    SegmentTooLarge,
    SettingsError,
)
from .primes import is_prime, primes_up_to, primorial
from .factorization import Factorization, PartialFactorization, factorize, try_factorize
from .functions import (
    ExactRatio,
    abundancy,
    divisors,
    is_squarefree,
    is_squarefull,
    omega,
    radical,
    reciprocal_divisor_sum,
    sigma,
    sigma_prime_power,
    valuation,
)

__all__ = [
    'MplabError', 'ArithmeticDomainError', 'IncompleteFactorization', 'SegmentTooLarge',
    'SettingsError', 'is_prime', 'primes_up_to', 'primorial', 'Factorization',
    'PartialFactorization', 'factorize', 'try_factorize', 'ExactRatio', 'abundancy',
    'divisors', 'is_squarefree', 'is_squarefull', 'omega', 'radical',
    'reciprocal_divisor_sum', 'sigma', 'sigma_prime_power', 'valuation',
]
