"""Utility functions."""

import re
from fractions import Fraction
from typing import Union

from homalt.errors import RationalError, UsageError

RATIONAL_PATTERN = re.compile(r'^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$')

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an int, a Fraction or a "p/q" string into an exact Fraction."""
    if isinstance(value, bool):
        raise RationalError(f"booleans are not rationals: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and RATIONAL_PATTERN.match(value):
        try:
            return Fraction(value.replace(' ', ''))
        except ZeroDivisionError:
            raise RationalError(f"zero denominator in {value!r}") from None
    raise RationalError(f"not an exact rational: {value!r}")


def format_rational(value: RationalLike) -> str:
    """Format a scalar as "p/q" (or "p" for integers)."""
    return str(Fraction(value))


def parse_param(raw: str) -> tuple[str, str]:
    """Split a CLI ``name=value`` parameter."""
    name, sep, value = raw.partition('=')
    if not sep or not name:
        raise UsageError(f"parameter must look like name=value, got {raw!r}")
    return name.strip(), value.strip()
