"""Exception types shared across the package."""


class CyclotopeError(Exception):
    """Base class for all package-specific errors."""


class DimensionTooSmall(CyclotopeError):
    """The ambient dimension t must be at least 3."""


class DimensionMismatch(CyclotopeError):
    """Two objects that must share a dimension do not."""


class EmptySetError(CyclotopeError):
    """An operation that needs a nonempty ground-set subset got the empty set."""


class NotProperSubset(CyclotopeError):
    """The equal-size criterion is defined for proper subsets only."""


class CapExceeded(CyclotopeError):
    """Exhaustive enumeration was requested above the configured cap."""


class BudgetExceeded(CyclotopeError):
    """The brute-force oracle was asked to search beyond its budget."""


class InvalidSpectrum(CyclotopeError):
    """A coordinate vector does not satisfy the spectrum invariants."""
