"""Exception types shared across the package."""


class ShuffleCalcError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ShuffleCalcError, ValueError):
    """An argument violates a documented precondition."""


class TruncationError(DomainError):
    """A value beyond the configured truncation degree was requested."""
