"""Exception types shared across the package."""


class ArcphiError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(ArcphiError, ValueError):
    """Malformed input: bad arc data, non-partition, unreadable files."""


class DomainError(ArcphiError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class CapacityError(ArcphiError, RuntimeError):
    """Instance exceeds an explicit size guard of an exact algorithm."""


class DegenerateConfigError(ArcphiError, ValueError):
    """Endpoint configuration with coincident points where a one-sided
    derivative would be ambiguous."""
