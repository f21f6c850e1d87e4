"""Exception types shared across the package."""


class OcpackError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(OcpackError):
    """Malformed graph file input."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class PreconditionError(OcpackError):
    """A documented precondition of an operation does not hold.

    ``witness`` carries a counterexample when one is available, e.g. an odd
    closed walk for a bipartiteness precondition or a triangle for a
    triangle-freeness precondition.
    """

    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class LimitExceededError(OcpackError):
    """An exhaustive oracle was asked to exceed its configured size limit."""


class GenerationError(OcpackError):
    """A randomized generator exhausted its retry budget."""


class VerificationError(OcpackError):
    """A certified output failed its own verification pass."""
