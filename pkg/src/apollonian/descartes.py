"""Descartes relation for bends and its linearized (Boyd-dual) form."""

from __future__ import annotations

from .numerics import isqrt_exact


class InvalidQuadruple(ValueError):
    pass


class NotIntegral(ValueError):
    pass


class NegativeDiscriminant(ValueError):
    pass


def descartes_holds(a: int, b: int, c: int, d: int) -> bool:
    return 2 * (a * a + b * b + c * c + d * d) == (a + b + c + d) ** 2


def boyd_dual(a: int, b: int, c: int, d: int) -> int:
    """Other root of the Descartes quadratic for the fixed triple (a, b, c)."""
    if not descartes_holds(a, b, c, d):
        raise InvalidQuadruple(f"({a}, {b}, {c}, {d}) violates the Descartes relation")
    dual = 2 * (a + b + c) - d
    assert descartes_holds(a, b, c, dual)
    return dual


def fourth_bends(a: int, b: int, c: int) -> tuple[int, int]:
    """Both integer bends completing the tangent triple (a, b, c), ascending.

    Raises NotIntegral when ab+bc+ca is not a perfect square and
    NegativeDiscriminant when it is negative.
    """
    disc = a * b + b * c + c * a
    if disc < 0:
        raise NegativeDiscriminant(f"ab+bc+ca = {disc} < 0 for ({a}, {b}, {c})")
    s = isqrt_exact(disc)
    if s is None:
        raise NotIntegral(f"ab+bc+ca = {disc} is not a perfect square")
    total = a + b + c
    return total - 2 * s, total + 2 * s
