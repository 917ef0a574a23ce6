"""Exception hierarchy shared by every engine."""

from __future__ import annotations


class CanringError(Exception):
    """Base class for all canring errors."""


class ParseError(CanringError, ValueError):
    """Malformed rational, polynomial text or divisor spec file."""


class UnknownVariableError(ParseError):
    """A polynomial mentions a variable outside the declared list."""

    def __init__(self, name: str, allowed: tuple[str, ...]) -> None:
        super().__init__(f"Unknown variable {name!r}; expected one of {', '.join(allowed)}")
        self.name = name


class NonHomogeneousError(ParseError):
    """A component polynomial is not (bi-)homogeneous."""

    def __init__(self, term: str, message: str | None = None) -> None:
        super().__init__(message or f"Polynomial is not homogeneous: offending term {term!r}")
        self.term = term


class VariableMismatchError(CanringError, ValueError):
    """Operands live in different polynomial rings."""


class ProportionalComponentsError(CanringError, ValueError):
    """Two divisor components define the same hypersurface."""


class DimensionMismatchError(CanringError, ValueError):
    """Matrix or vector shapes do not fit together."""


class DegreeError(CanringError, ValueError):
    """The divisor degree is not positive where a positive degree is required."""


class NonEffectiveError(CanringError, ValueError):
    """A negative coefficient where an effective divisor is required."""


class DependentBasisError(CanringError, ValueError):
    """Linear forms expected to be independent are dependent."""


class OutsideConeError(CanringError, ValueError):
    """A point is not in the cone or not in the span of the given rays."""


class ConfigError(CanringError, ValueError):
    """Malformed caps string."""


class CapacityExceededError(CanringError):
    """A configured search cap was exceeded."""

    def __init__(self, cap: str, limit: int, needed: int | None = None) -> None:
        detail = f" (needed {needed})" if needed is not None else ""
        super().__init__(f"Capacity {cap}={limit} exceeded{detail}")
        self.cap = cap
        self.limit = limit
        self.needed = needed


class RayMismatchError(CanringError):
    """Closed-form and direct computations of an extremal ray disagree."""


class NormalFormError(CanringError):
    """Rewriting did not terminate within the step cap."""
