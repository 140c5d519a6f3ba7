"""
Exact rational <-> string conversion.

Every number that leaves the package is written as "p" or "p/q" in lowest
terms; nothing is ever rendered as a decimal.
"""

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Union

from ..constants import RATIONAL_PATTERN

_RATIONAL_RE = re.compile(RATIONAL_PATTERN)


def format_rational(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parses "[-]digits" or "[-]digits/digits".

    Raises:
        ValueError: On any other spelling (decimals, exponents, spaces) or a zero denominator.
    """
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not an exact rational: {text!r}")
    if '/' in text and int(text.split('/')[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(text)


def format_vector(values: Optional[Sequence[Fraction]]) -> Optional[List[str]]:
    if values is None:
        return None
    return [format_rational(v) for v in values]


def format_tuple(values: Sequence[Fraction]) -> str:
    """(a, b, c) for tables and log lines."""
    return '(' + ', '.join(format_rational(v) for v in values) + ')'


def format_rows(rows: Iterable[Sequence[Fraction]]) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in rows]
