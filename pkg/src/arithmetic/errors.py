class MplabError(Exception):
    """Base class for every error raised by the toolkit"""


class ArithmeticDomainError(MplabError, ValueError):
    """Input outside the domain of an operation (n = 0, p | g, repeated roots, ...)"""


class SettingsError(MplabError, ValueError):
    """Malformed configuration value"""


class SegmentTooLarge(MplabError, ValueError):
    """Sieve segment exceeds the configured memory budget"""


class IncompleteFactorization(MplabError):
    """
    Factoring stopped at the effort cap.

    The primes found so far are in `partial`; `cofactor` is the composite
    part that is still unfactored, so partial.value * cofactor == n.
    """

    def __init__(self, n, partial, cofactor):
        self.n = n
        self.partial = partial
        self.cofactor = cofactor
        super().__init__(
            f"factorization of {n} incomplete: composite cofactor {cofactor} "
            f"({len(str(cofactor))} digits) left after effort cap"
        )
