"""
Helper utilities shared across the pipeline.
"""

import json
from fractions import Fraction
from typing import Any, List, Union

from .errors import MatrixError, PDParseError


def format_rational(value: Union[int, Fraction]) -> str:
    """
    Serialize an exact rational as "a/b", or "a" when integral.

    Args:
        value: Integer or Fraction

    Returns:
        Canonical string form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Any) -> Fraction:
    """
    Parse "a/b", "a" or a JSON number into a Fraction.

    Floats are rejected unless they are integral.

    Raises:
        PDParseError: If the value is not an exact rational
    """
    if isinstance(text, bool) or not isinstance(text, (int, float, str)):
        raise PDParseError(f"Not a rational value: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        if not text.is_integer():
            raise PDParseError(f"Inexact rational value: {text!r}")
        return Fraction(int(text))
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise PDParseError(f"Not a rational value: {text!r}") from e


def parse_int_rows(text: Union[str, List[List[int]]]) -> List[List[int]]:
    """
    Parse a JSON-style nested list of integers such as "[[-3]]".

    Args:
        text: String or already-decoded nested list

    Returns:
        List of integer rows

    Raises:
        MatrixError: If the input is not a list of integer lists
    """
    if isinstance(text, str):
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as e:
            raise MatrixError(f"Malformed matrix {text!r}: {e.msg}") from e
    else:
        rows = text
    if not isinstance(rows, (list, tuple)) or not all(isinstance(row, (list, tuple)) for row in rows):
        raise MatrixError(f"Matrix must be a list of rows, got {rows!r}")
    for row in rows:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise MatrixError(f"Matrix entries must be integers, got {entry!r}")
    return [list(row) for row in rows]
