from .abc import AbcTriple, GapTriple, abc_quality, gap_triples
from .factorials import (
    ShiftedFactorialRow,
    ShiftedStatus,
    factorial_abundancy,
    factorial_abundancy_increasing,
    factorial_factorization,
    factorial_radical_exponent,
    legendre_exponent,
    multiperfect_factorials,
    perfect_factorials,
    shifted_factorial_scan,
)
from .polynomial import (
    RadicalRow,
    homogeneous_radical_scan,
    parse_coefficients,
    poly_radical_scan,
    reference_exponent,
)

__all__ = [
    'AbcTriple',
    'GapTriple',
    'abc_quality',
    'gap_triples',
    'ShiftedFactorialRow',
    'ShiftedStatus',
    'factorial_abundancy',
    'factorial_abundancy_increasing',
    'factorial_factorization',
    'factorial_radical_exponent',
    'legendre_exponent',
    'multiperfect_factorials',
    'perfect_factorials',
    'shifted_factorial_scan',
    'RadicalRow',
    'homogeneous_radical_scan',
    'parse_coefficients',
    'poly_radical_scan',
    'reference_exponent',
]
