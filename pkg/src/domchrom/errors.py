"""Exception hierarchy shared by every domchrom module."""

from __future__ import annotations


class DomChromError(Exception):
    """Base class for all errors raised by the package."""


class ParameterError(DomChromError, ValueError):
    """A family or solver parameter is out of its allowed range."""


class ArgumentError(DomChromError, ValueError):
    """An operation argument does not refer to the input graph, or a coloring is partial."""


class DomainError(DomChromError, ValueError):
    """The quantity is undefined on this input (e.g. an isolated vertex for chi_dom)."""


class BudgetError(DomChromError):
    """The instance exceeds a configured size budget."""


class Graph6Error(DomChromError, ValueError):
    """Malformed graph6 record; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
