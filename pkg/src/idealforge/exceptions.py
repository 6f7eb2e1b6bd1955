"""Typed errors raised by idealforge.

Every error carries the process exit code the CLI reports for it:
1 for bad input, 2 when a predicted identity fails, 3 for a span deficit.
"""


class IdealForgeError(Exception):
    """Base class for all idealforge errors."""

    exit_code = 1


class InvalidField(IdealForgeError, ValueError):
    """Unknown field tag, non-prime modulus or a value the field cannot represent."""


class FieldMismatch(IdealForgeError, ValueError):
    """Operands live over different fields."""


class DimensionMismatch(IdealForgeError, ValueError):
    """Vector or matrix shapes do not fit together."""


class IndexOutOfRange(IdealForgeError, IndexError):
    """A row/column window reaches past the matrix."""


class ZeroPolynomial(IdealForgeError, ValueError):
    """The operation needs a nonzero polynomial."""


class DivisionByZeroPoly(IdealForgeError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class NotInvertible(IdealForgeError, ZeroDivisionError):
    """Field element zero has no inverse."""


class FieldTooLarge(IdealForgeError, ValueError):
    """Exhaustive root scan refused: modulus exceeds the scan bound."""


class NotMonic(IdealForgeError, ValueError):
    """A modulus polynomial must be monic."""


class ZeroConstantTerm(IdealForgeError, ValueError):
    """A modulus polynomial must have a nonzero constant term."""


class DegreeZero(IdealForgeError, ValueError):
    """A modulus polynomial must have degree at least one."""


class NotSquarefree(IdealForgeError, ValueError):
    """The polynomial has a repeated root."""


class IncompleteRoots(IdealForgeError, ValueError):
    """The polynomial does not split into distinct linear factors over the field."""


class DegreeTooLarge(IdealForgeError, ValueError):
    """A residue-ring element has degree at or above the modulus degree."""


class NotPrimeField(IdealForgeError, ValueError):
    """Codes are only built over prime fields."""


class TooLarge(IdealForgeError, ValueError):
    """Enumeration would exceed the configured bound."""


class ZeroCode(IdealForgeError, ValueError):
    """Minimum distance is undefined for the zero code."""


class ExhaustedRetries(IdealForgeError, RuntimeError):
    """Rejection sampling gave up."""


class InvalidArgument(IdealForgeError, ValueError):
    """A parameter is outside its allowed range."""


class UsageError(IdealForgeError, ValueError):
    """Command-line usage error."""


class InvariantViolation(IdealForgeError, ArithmeticError):
    """An identity that must hold exactly did not hold."""

    exit_code = 2


class SpanDeficit(IdealForgeError):
    """Consecutive generator rows cannot span the code.

    Raised when r = min{lcm(k, l), k + l - d} is smaller than the code
    dimension, or when the selected rows fail to span the enumerated code.
    """

    exit_code = 3

    def __init__(self, message: str, r: int, dim: int, rows_available: int):
        super().__init__(message)
        self.r = r
        self.dim = dim
        self.rows_available = rows_available

    def to_dict(self) -> dict[str, object]:
        """Structured explanation for machine-readable output."""
        return {
            "error": "SpanDeficit",
            "message": str(self),
            "r": self.r,
            "dim": self.dim,
            "rows_available": self.rows_available,
        }
