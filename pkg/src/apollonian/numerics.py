"""Exact integer and rational helpers.

Python ints are arbitrary precision and ``fractions.Fraction`` is always
stored reduced with a positive denominator, so both are used directly as
the library's integer and rational types.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Optional, Union

Rat = Fraction
Number = Union[int, Fraction]

_DECIMAL_CTX = Context(prec=12, rounding=ROUND_HALF_EVEN)


def isqrt_exact(v: int) -> Optional[int]:
    """Return ``s`` with ``s*s == v``, or None if ``v`` is not a perfect square."""
    if v < 0:
        raise ValueError(f"isqrt_exact of negative value {v}")
    s = math.isqrt(v)
    return s if s * s == v else None


def gcd3(a: int, b: int, c: int) -> int:
    return math.gcd(math.gcd(a, b), c)


def is_integral(q: Number) -> bool:
    return isinstance(q, int) or q.denominator == 1


def rat_str(q: Number) -> str:
    """Format an exact value as ``p/q`` (or ``p`` when integral)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text)


def decimal_str(q: Number) -> str:
    """Round to 12 significant digits (half-even) and print without exponent."""
    q = Fraction(q)
    if q == 0:
        return "0"
    d = _DECIMAL_CTX.divide(Decimal(q.numerator), Decimal(q.denominator))
    s = format(d.normalize(), "f")
    return s
