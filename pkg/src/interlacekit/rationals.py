"""Exact rational scalars and their canonical string form.

All arithmetic in this package runs on ``fractions.Fraction``: arbitrary
precision, automatically reduced, canonical positive denominator.  The
alias ``Rational`` names that choice once.  Every serialized number uses
the string form ``"p"`` or ``"p/q"`` with integer ``p`` and ``q > 0``;
floats never appear in any interchange format.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputFormatError

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction.

    Rejects anything that is not an integer pair, including q <= 0,
    decimal points, and empty parts.
    """
    if not isinstance(text, str):
        raise InputFormatError(
            f"rational must be a string, got {type(text).__name__}"
        )
    body = text.strip()
    num_part, sep, den_part = body.partition("/")
    try:
        num = int(num_part)
    except ValueError:
        raise InputFormatError(f"invalid rational {text!r}") from None
    if not sep:
        return Fraction(num)
    try:
        den = int(den_part)
    except ValueError:
        raise InputFormatError(f"invalid rational {text!r}") from None
    if den <= 0:
        raise InputFormatError(
            f"invalid rational {text!r}: denominator must be positive"
        )
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p"`` or ``"p/q"``. Inverse of parse_rational."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: int | Fraction) -> Fraction:
    """Coerce an int or Fraction; reject floats and everything else."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InputFormatError(
        f"expected int or Fraction, got {type(value).__name__}"
    )
