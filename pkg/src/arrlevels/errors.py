"""Shared exception types.

Every error raised by the library on bad input or exhausted search
budgets derives from ArrlevelsError so callers (and the CLI) can
distinguish library failures from programming mistakes.
"""

from __future__ import annotations


class ArrlevelsError(Exception):
    """Base class for all library errors."""


class DimensionError(ArrlevelsError):
    """Shapes or index ranges do not line up."""


class GeneralPositionError(ArrlevelsError):
    """A configuration has a linearly dependent r-subset of columns."""

    def __init__(self, subset: tuple[int, ...], message: str | None = None):
        self.subset = subset
        super().__init__(message or f"columns {list(subset)} are linearly dependent")


class DegeneratePolynomialError(ArrlevelsError):
    """An operation received the zero polynomial where roots are expected."""


class BoundaryRootError(ArrlevelsError):
    """A root lies exactly on an interval endpoint that must be root-free."""


class GenericityError(ArrlevelsError):
    """A motion is not generic: coincident, multiple, or endpoint events.

    ``subsets`` names the offending column subsets (1-based).
    """

    def __init__(self, subsets: tuple[tuple[int, ...], ...], message: str | None = None):
        self.subsets = subsets
        names = "; ".join(str(list(s)) for s in subsets)
        super().__init__(message or f"non-generic motion at column subsets {names}")


class InconsistentInputError(ArrlevelsError):
    """Inputs fail a structural identity they are required to satisfy."""


class BudgetExhaustedError(ArrlevelsError):
    """A randomized or iterative search ran out of attempts."""


class FileFormatError(ArrlevelsError):
    """A serialized input could not be parsed; message names the field."""
