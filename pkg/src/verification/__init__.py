from .bounds import (
    BOUNDARY,
    HOLDS,
    VIOLATED,
    BoundClass,
    BoundReport,
    bound_exponent,
    bound_is_strict,
    check_bound,
    classical_perfect_bounds,
    classify,
    classify_pair,
    finiteness_degree_threshold,
    verify_database,
)
from .lemmas import (
    PROOF,
    STATEMENT,
    LoopyInstance,
    chain_divisibility,
    chain_divisibility_scan,
    mixed_square_abundancy,
    odd_chain_bound_holds,
    odd_chain_trials,
    odd_valuation_bound,
    product_bound_trials,
    threshold_gap,
    two_adic_identity_scan,
    two_adic_sigma_identity,
)

__all__ = [
    'BOUNDARY',
    'HOLDS',
    'VIOLATED',
    'BoundClass',
    'BoundReport',
    'bound_exponent',
    'bound_is_strict',
    'check_bound',
    'classical_perfect_bounds',
    'classify',
    'classify_pair',
    'finiteness_degree_threshold',
    'verify_database',
    'PROOF',
    'STATEMENT',
    'LoopyInstance',
    'chain_divisibility',
    'chain_divisibility_scan',
    'mixed_square_abundancy',
    'odd_chain_bound_holds',
    'odd_chain_trials',
    'odd_valuation_bound',
    'product_bound_trials',
    'threshold_gap',
    'two_adic_identity_scan',
    'two_adic_sigma_identity',
]
