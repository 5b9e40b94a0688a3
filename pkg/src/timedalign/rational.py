"""Exact rational parsing and rendering.

All real-valued quantities are :class:`fractions.Fraction`. Inputs are parsed
from decimal strings so that ``"0.1"`` means exactly one tenth.
"""
from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

RationalLike = Union[Fraction, int, str, Decimal, float]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Strings may be decimals (``"2.5"``, ``"-1e-3"``) or ratios (``"7/3"``).
    Floats go through their shortest ``repr`` so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not time values")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal or ``p/q`` string exactly; raise ``ValueError`` otherwise."""
    s = text.strip()
    if not s:
        raise ValueError("empty number")
    low = s.lower()
    if "inf" in low or "nan" in low:
        raise ValueError(f"non-finite number {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact decimal or ratio: {text!r}") from None


def is_terminating(x: Fraction) -> bool:
    """True when ``x`` has a finite decimal expansion (denominator 2^a * 5^b)."""
    d = x.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def to_decimal(x: Fraction) -> str | None:
    """Exact decimal rendering of ``x``, or ``None`` if it does not terminate."""
    if not is_terminating(x):
        return None
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    places = 0
    while 10**places % d:
        places += 1
    scaled = x.numerator * (10**places // d)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_fraction(x: Fraction) -> str:
    """``p/q`` form; integers render without the denominator."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_rational(x: Fraction) -> str:
    """Human rendering: the decimal when it terminates, else ``p/q``."""
    dec = to_decimal(x)
    return dec if dec is not None else format_fraction(x)
