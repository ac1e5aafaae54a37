"""Exception hierarchy shared by every part of the package."""

from __future__ import annotations


class MultrecError(Exception):
    """Base class for all errors raised by :mod:`multrec`."""


class ValidationError(MultrecError, ValueError):
    """A recursion specification violates one of its invariants."""


class OrderZero(ValidationError):
    pass


class ArityMismatch(ValidationError):
    pass


class ZeroBase(ValidationError):
    pass


class NonIntegerExponent(ValidationError):
    pass


class NonExactData(ValidationError):
    """An exact-only path was handed floating-point data."""


class OverflowBudgetExceeded(MultrecError, ArithmeticError):
    """Exact arithmetic produced an integer larger than the bit budget.

    ``step`` is the recursion index being computed when the budget was hit
    (``None`` when not applicable) and ``partial`` holds whatever prefix of
    results had been completed.
    """

    def __init__(self, message, *, bits=None, budget=None, step=None, partial=None):
        super().__init__(message)
        self.bits = bits
        self.budget = budget
        self.step = step
        self.partial = list(partial) if partial is not None else []


class ToleranceInvalid(MultrecError, ValueError):
    pass


class RootFindingFailed(MultrecError, ArithmeticError):
    pass


class SingularSystem(MultrecError, ArithmeticError):
    pass


class UnsupportedOrder(MultrecError, ValueError):
    pass


class ParseError(MultrecError, ValueError):
    """Structured failure from the recursion DSL or a problem document.

    Attributes
    ----------
    line, column : int
        1-based position of the offending character.
    expected : tuple of str
        Tokens that would have been accepted at that position (may be empty
        for semantic errors such as duplicate factors).
    """

    def __init__(self, message, line=1, column=1, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{message} at line {line}, column {column}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)
