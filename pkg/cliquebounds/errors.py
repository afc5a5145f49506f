"""Exception hierarchy shared by every module."""
from typing import Any, List, Optional


class CliqueBoundsError(Exception):
    """Base class for all library errors."""


class DomainError(CliqueBoundsError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(CliqueBoundsError):
    """A vertex, face or enumeration cap would be exceeded."""


class InapplicableConstructionError(CliqueBoundsError):
    """A graph construction's precondition does not hold for (m, k)."""

    def __init__(self, construction: str, reason: str):
        super().__init__(f"{construction} is not applicable: {reason}")
        self.construction = construction
        self.reason = reason


class BoardInvariantError(CliqueBoundsError):
    """A board move broke one of the allowable-move conditions."""

    def __init__(self, message: str, trace: Optional[List[Any]] = None):
        super().__init__(message)
        self.trace = list(trace or [])


class CounterexampleError(CliqueBoundsError):
    """A verification run found a graph exceeding a proven bound."""

    def __init__(self, message: str, witness6: Optional[str] = None):
        super().__init__(message)
        self.witness6 = witness6
