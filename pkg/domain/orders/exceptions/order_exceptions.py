"""Scattered order domain exceptions."""

from typing import Optional


class OrderError(Exception):
    """Base class for order domain errors."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class TermSyntaxError(OrderError):
    """Raised when an expression string does not follow the term grammar."""

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} at position {position}")


class InvalidTermError(OrderError):
    """Raised when a head element embeds into no pattern element."""

    def __init__(self, message: str, subterm: str) -> None:
        self.subterm = subterm
        super().__init__(message)


class ShapeMismatchError(OrderError):
    """Raised when a subset spec or embedding does not fit the shape of a term."""

    def __init__(self, message: str, path: str = "") -> None:
        self.path = path
        super().__init__(f"{message} at {path}" if path else message)


class InvalidDecompositionError(OrderError):
    """Raised when a part sequence is not a minimal decomposition."""


class PreconditionViolationError(OrderError):
    """Raised when an operation is called outside its precondition."""


class FiniteTermError(PreconditionViolationError):
    """Raised when an infinite part is required but the term is finite."""

    def __init__(self, term: Optional[str] = None) -> None:
        message = "Term has no infinite part"
        super().__init__(f"{message}: {term}" if term else message)


class ChainConditionError(PreconditionViolationError):
    """Raised when a chain of specs is not decreasing in the separative order."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Chain condition fails between A_{index + 1} and A_{index}")


class OutsideExactTierError(PreconditionViolationError):
    """Raised when an exact separative-order decision is not available."""


class FusionError(OrderError):
    """Raised when a fusion request cannot be carried out."""
