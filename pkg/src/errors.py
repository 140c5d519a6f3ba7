"""
Exception hierarchy for the column competent matrix toolkit.

Each exception maps to one exit code in main.py.
"""

from typing import Optional


class CompmatError(Exception):
    """Base class for every error raised deliberately by this package."""


class DocumentParseError(CompmatError, ValueError):
    """A matrix document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class IndexSetParseError(CompmatError, ValueError):
    """An index-set argument such as --alpha is malformed or out of range."""


class DimensionMismatch(CompmatError, ValueError):
    """Operands of incompatible shapes."""


class SingularPivot(CompmatError, ArithmeticError):
    """A principal pivot was requested on a singular principal submatrix."""

    def __init__(self, message: str, pivot_set=None):
        self.pivot_set = pivot_set
        super().__init__(message)


class DegenerateQ(CompmatError, ValueError):
    """q is degenerate with respect to A, so its local degree is undefined."""


class ModeDisagreement(CompmatError, RuntimeError):
    """The theorem and direct adequacy procedures returned different verdicts."""


class InconsistentReport(CompmatError, RuntimeError):
    """A classification report violates one of its theorem cross-checks."""


class CapExceeded(CompmatError, ValueError):
    """A subset enumeration was requested above the configured dimension cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"dimension {n} exceeds the enumeration cap {cap}")


class UnsupportedStrictSystem(CompmatError, ValueError):
    """Strict inequalities were combined with a non-zero right-hand side."""


class InvalidSolution(CompmatError, ValueError):
    """A (w, z) pair does not solve the given LCP."""


class MissingVector(CompmatError, ValueError):
    """The command needs q but the matrix document has none."""
