"""Exception types shared across the package.

Every failure raised by library code is an instance of WarpingError, so
callers can catch one base class at an API boundary.  The subclasses keep
distinct failure modes distinguishable in tests and in CLI exit handling.
"""

from __future__ import annotations

__all__ = [
    "WarpingError",
    "CodeSyntaxError",
    "StructureError",
    "UnknownCrossing",
    "InvalidParam",
    "NotAKnot",
    "BudgetExceeded",
    "CapExceeded",
    "UnknownSigns",
    "InternalInconsistency",
    "DataError",
]


class WarpingError(Exception):
    """Base class for all errors raised by this package."""


class CodeSyntaxError(WarpingError):
    """A token in a notation string does not match the grammar."""


class StructureError(WarpingError):
    """Tokens are well formed but do not assemble into a valid code."""


class UnknownCrossing(WarpingError):
    """A crossing label outside 1..c was requested."""


class InvalidParam(WarpingError):
    """A generator or search parameter is out of its documented range."""


class NotAKnot(WarpingError):
    """A construction closed up into more than one component."""


class BudgetExceeded(WarpingError):
    """A bounded search ran out of budget before reaching a certificate."""


class CapExceeded(WarpingError):
    """An input is larger than the hard cap of an exponential algorithm."""


class UnknownSigns(WarpingError):
    """An operation needs crossing signs that the diagram does not carry."""


class InternalInconsistency(WarpingError):
    """Two independent computations of the same quantity disagree."""


class DataError(WarpingError):
    """A bundled or user-supplied data file is malformed or inconsistent."""
