"""Exception types for contract violations.

Every precondition failure raises a distinct class so callers (and the
sweep harness, which must never die mid-run) can tell configuration
mistakes apart from genuine mathematical disagreements.
"""


class PermBinomError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeError(PermBinomError, ValueError):
    """Field characteristic is not a prime."""


class ReducibleModulusError(PermBinomError, ValueError):
    """Supplied modulus polynomial is not irreducible over F_p."""


class DegreeMismatchError(PermBinomError, ValueError):
    """Modulus degree does not match the requested extension degree."""


class FieldMismatchError(PermBinomError, ValueError):
    """Operands belong to different field specs."""


class ZeroElementError(PermBinomError, ValueError):
    """Zero element where a nonzero one is required (e.g. element order)."""


class EvenCharacteristicError(PermBinomError, ValueError):
    """Operation requires odd q / odd characteristic."""


class BadFieldForCubicError(PermBinomError, ValueError):
    """Cubic characters need q = 1 (mod 3)."""


class GcdViolationError(PermBinomError, ValueError):
    """Exponent n fails the gcd precondition of a criterion or formula."""


class ZeroPolynomialError(PermBinomError, ValueError):
    """Constant or zero polynomial has no index decomposition."""


class NonMinimalIndexError(PermBinomError, ValueError):
    """Index form does not reproduce a minimal-index decomposition."""


class EvenPrimeError(PermBinomError, ValueError):
    """p = 2 not supported by this point-count routine."""


class SmallPrimeError(PermBinomError, ValueError):
    """p = 3 not supported by the congruence residue."""


class UnsupportedPrimeError(PermBinomError, ValueError):
    """Prime outside the domain of the trace-coefficient definition."""


class CrossCheckFailedError(PermBinomError, ArithmeticError):
    """Two independent computation routes disagree; a real math bug."""


class DivisibilityViolationError(PermBinomError, ArithmeticError):
    """Closed-form numerator failed an exact divisibility requirement."""


class EnumerationGuardError(PermBinomError, ValueError):
    """Refused to enumerate a field larger than the configured guard."""
