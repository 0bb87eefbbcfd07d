"""Exception hierarchy for fusion ring computations."""
from typing import Any, Optional


class FusionRingError(Exception):
    """Base class for all domain errors."""


class InvalidAffineType(FusionRingError, ValueError):
    """Malformed type string or a type outside the affine classification."""


class InvalidWeight(FusionRingError, ValueError):
    """Bad weight literal, wrong length, non-dominant or outside P_k."""


class WrongTypeClass(FusionRingError, ValueError):
    """Operation requested for a type class it does not apply to."""


class GroupTooLarge(FusionRingError):
    """A Weyl group or torus group exceeds its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} too large: order {size} exceeds cap {cap}")


class IntegralityViolation(FusionRingError):
    """A quantity that must be an integer is not within tolerance of one."""

    def __init__(self, label: Any, raw: complex, tolerance: float):
        self.label = label
        self.raw = raw
        self.tolerance = tolerance
        super().__init__(
            f"non-integral value at {label}: raw={raw!r} (tolerance {tolerance:g})"
        )


class NumericalFailure(FusionRingError):
    """Floating point evaluation produced values outside their exact constraints."""


class TableInconsistency(FusionRingError):
    """Static tables or conventions disagree with a computed structure."""


class InvariantFailure(FusionRingError):
    """A verification check of the invariant suite failed."""

    def __init__(self, check: str, details: Optional[str] = None):
        self.check = check
        self.details = details
        message = f"invariant check failed: {check}"
        if details:
            message += f" ({details})"
        super().__init__(message)
