"""Exception types shared across the package."""


class UsageError(ValueError):
    """Argument outside the supported range (maps to CLI exit code 2)."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """The requested quantity is a divergent series or integral."""


class PrecisionError(ArithmeticError):
    """A numerical routine could not reach its requested tolerance."""


class InvariantError(RuntimeError):
    """An internal exactness invariant was violated (indicates a bug)."""
