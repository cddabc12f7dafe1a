"""
Exception hierarchy for the torus quotient toolkit.

Every error raised on purpose by the package derives from TorusQuotientError,
so the CLI can map failures to exit codes:

- input problems (parse, move, label, subset, rank domain) -> 1
- NonEffectiveActionError -> 2
- InvariantViolationError -> 3
"""

from typing import Any, Optional


class TorusQuotientError(Exception):
    """Base class for all package errors."""


class MatrixParseError(TorusQuotientError, ValueError):
    """Matrix text or JSON could not be turned into a TorusAction."""


class InvalidMoveError(TorusQuotientError, ValueError):
    """A matrix move had out-of-range or conflicting indices."""


class UnknownLabelError(TorusQuotientError, KeyError):
    """A ground-set label is not present in the matroid."""


class EmptySubsetError(TorusQuotientError, ValueError):
    """An operation that needs a nonempty column subset got an empty one."""


class RankDomainError(TorusQuotientError, ValueError):
    """The operation is undefined for the rank (or weights) supplied."""


class SubsetLimitError(TorusQuotientError):
    """An exponential enumeration was requested above the configured limit."""

    def __init__(self, size: int, limit: int):
        super().__init__(
            f"ground set of size {size} exceeds the enumeration limit {limit} "
            "(raise the limit or pass --force)"
        )
        self.size = size
        self.limit = limit


class NonEffectiveActionError(TorusQuotientError):
    """The torus action has a nontrivial kernel."""

    def __init__(self, kernel: Any, message: Optional[str] = None):
        super().__init__(message or f"action is not effective; kernel {kernel}")
        self.kernel = kernel


class InvariantViolationError(TorusQuotientError, AssertionError):
    """Two independent computations of the same quantity disagree."""
