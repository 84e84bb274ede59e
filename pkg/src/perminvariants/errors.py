"""Exception types shared across the package.

Each maps to a distinct CLI exit status (see ``perminvariants.cli``).
"""


class PermParseError(ValueError):
    """Malformed cycle notation, or an index outside ``1..n``."""


class CapExceededError(RuntimeError):
    """A configured size cap (group order, arity, monomial count) was hit."""

    def __init__(self, message: str, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound


class ConsistencyError(AssertionError):
    """Two independent computations that must agree did not.

    Always indicates a bug; never a property of the input.
    """
