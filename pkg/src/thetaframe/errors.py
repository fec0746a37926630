"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported domain."""


class ConvergenceError(RuntimeError):
    """An iteration hit its safety cap before certifying the result."""


class RangeError(ValueError):
    """A search bracket does not contain the feature being located."""
