"""
Exact rational parsing and formatting
"""
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Tuple, Union

from .errors import RationalParseError

RationalLike = Union[str, int, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Convert a decimal string, "p/q" string, int or Fraction to an exact Fraction.

    Floats are converted through their shortest repr, so 0.9 becomes 9/10.
    """
    if isinstance(value, bool):
        raise RationalParseError(f"Not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if not isinstance(value, str):
        raise RationalParseError(f"Not a rational: {value!r}")

    text = value.strip()
    if not text:
        raise RationalParseError("Empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise RationalParseError(f"Not a decimal or p/q rational: {value!r}")


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a comma-separated list such as "1,1,0.9,-0.8,-2.1" """
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise RationalParseError(f"Malformed value list: {text!r}")
    return [parse_rational(p) for p in parts]


def format_rational(value: Fraction) -> str:
    """Integers print bare, everything else as p/q"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def scale_to_integers(values: Iterable[Fraction]) -> Tuple[List[int], int]:
    """
    Multiply every value by the common denominator.

    Returns the integer numerators and the denominator; signs and order
    of all partial sums are preserved exactly.
    """
    values = list(values)
    denominator = lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * denominator) for v in values], denominator
