from .lucas import (
    MULTIPERFECT,
    UNDETERMINED,
    GrowthRecord,
    MultirepdigitHit,
    MultirepdigitSpec,
    PrimeSetIdentity,
    RatioChain,
    RepunitSpec,
    factorize_repunit,
    lucas_u,
    prime_set_identity,
    rank_divides_p_minus_one,
    rank_of_apparition,
    reciprocal_prime_sum,
    repunit_abundancy_growth,
    scan_multirepdigit_multiperfect,
    sigma_ratio_chain,
    submultiplicative,
)

__all__ = [
    'MULTIPERFECT',
    'UNDETERMINED',
    'GrowthRecord',
    'MultirepdigitHit',
    'MultirepdigitSpec',
    'PrimeSetIdentity',
    'RatioChain',
    'RepunitSpec',
    'factorize_repunit',
    'lucas_u',
    'prime_set_identity',
    'rank_divides_p_minus_one',
    'rank_of_apparition',
    'reciprocal_prime_sum',
    'repunit_abundancy_growth',
    'scan_multirepdigit_multiperfect',
    'sigma_ratio_chain',
    'submultiplicative',
]
