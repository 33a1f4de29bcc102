"""Parsing and rendering of exact rationals and integer lists."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a :class:`Fraction` without ever going through floats.

    Accepts ints, ``Fraction`` (or any ``numbers.Rational``) and strings such
    as ``"3"``, ``"-2/7"``. Floats are rejected because they would silently
    smuggle rounding error into exact computations.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        return Fraction(text)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


def parse_int_list(text: str) -> list[int]:
    """Parse ``"3,5,7"`` into ``[3, 5, 7]``. An empty string gives ``[]``."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        return []
    out = []
    for p in parts:
        if not p:
            raise ValueError(f"empty entry in integer list {text!r}")
        out.append(int(p))
    return out


def parse_rational_list(text: str) -> list[Fraction]:
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        return []
    return [as_rational(p) for p in parts]


def format_rationals(values: Iterable[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]
