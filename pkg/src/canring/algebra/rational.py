"""Exact rationals: floors, fractional parts, parsing and canonical text."""

from __future__ import annotations

import math
import re
from collections.abc import Iterable
from fractions import Fraction

from ..errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def floor_rational(r: Fraction | int) -> int:
    """Greatest integer not exceeding r."""
    return math.floor(r)


def fractional_part(r: Fraction | int) -> Fraction:
    """r - floor(r), always in [0, 1)."""
    return Fraction(r) - math.floor(r)


def parse_rational(text: str | int) -> Fraction:
    """Parse ``p`` or ``p/q`` into a normalized Fraction.

    Raises:
        ParseError: on anything else, or a zero denominator
    """
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"Malformed rational {text!r}: expected p or p/q")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Malformed rational {text!r}: zero denominator")
    return Fraction(numerator, denominator)


def format_rational(r: Fraction | int) -> str:
    """Canonical text: ``p`` for integers, ``p/q`` otherwise."""
    return str(Fraction(r))


def lcm_all(values: Iterable[int]) -> int:
    """lcm of the values; 1 for an empty iterable."""
    result = 1
    for value in values:
        result = math.lcm(result, value)
    return result


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least positive integer clearing every denominator."""
    return lcm_all(Fraction(v).denominator for v in values)
