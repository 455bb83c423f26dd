"""Exact rational scalars.

All probabilities in the kernel are :class:`fractions.Fraction`.  Floats only
appear when a value is formatted for display.
"""

import json
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

from .errors import InvalidScalarError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Accepted forms are integers and other rationals, ``[numerator,
    denominator]`` pairs, strings such as ``"1/3"``, ``"0.25"`` or ``"2"``,
    :class:`~decimal.Decimal`, and floats.  Floats are read through their
    shortest decimal representation, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, bool):
        raise InvalidScalarError(f"booleans are not scalars: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise InvalidScalarError(f"non-finite scalar: {value!r}")
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise InvalidScalarError(f"non-finite scalar: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("["):
            try:
                return as_scalar(json.loads(text, parse_float=Decimal))
            except ValueError as exc:
                raise InvalidScalarError(f"cannot parse scalar {value!r}") from exc
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidScalarError(f"cannot parse scalar {value!r}") from exc
    if isinstance(value, (list, tuple)):
        if len(value) != 2 or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in value
        ):
            raise InvalidScalarError(
                f"rational pairs must be [numerator, denominator] integers: {value!r}"
            )
        num, den = value
        if den == 0:
            raise InvalidScalarError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise InvalidScalarError(f"cannot interpret {value!r} as a scalar")


def scalar_to_json(value: Fraction) -> list:
    """``[numerator, denominator]`` in lowest terms."""
    value = Fraction(value)
    return [value.numerator, value.denominator]


def format_scalar(value: Fraction, digits: int = 4) -> str:
    """Human-readable form, e.g. ``2/3 (≈0.6667)``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator} (≈{float(value):.{digits}f})"


def parse_scalar_list(text: str) -> list:
    """Parse ``"1/2,1/4,1/4"`` or a JSON list such as ``[[1,2],[1,4],[1,4]]``."""
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text, parse_float=Decimal)
        except ValueError as exc:
            raise InvalidScalarError(f"cannot parse scalar list {text!r}") from exc
        if not isinstance(items, list):
            raise InvalidScalarError(f"expected a list, got {text!r}")
        return [as_scalar(item) for item in items]
    return [as_scalar(part) for part in text.split(",") if part.strip()]
