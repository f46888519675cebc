"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator and denominator reduced, so it is
used directly as the scalar type. This module only adds coercion and the
``"p/q"`` text encoding used by the JSON formats.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def rat_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"rationals are encoded as 'p/q' strings, got {s!r}")
    return Fraction(s.strip())


def in_unit(x: Fraction) -> bool:
    return ZERO <= x <= ONE
