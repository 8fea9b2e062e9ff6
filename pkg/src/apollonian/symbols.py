"""Circle symbols ``(x_dot, y_dot)/bend`` and exact packing generation.

A circle with bend ``b`` and center ``(x, y)`` is stored through its
reduced coordinates ``x_dot = b*x`` and ``y_dot = b*y``.  Inside a
Descartes configuration, bends and both reduced coordinates obey the same
linear reflection rule ``new = 2*(sum of the other three) - old``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .descartes import descartes_holds
from .enumeration import GasketKey, quintet
from .numerics import rat_str


class StripUnsupported(ValueError):
    pass


@dataclass(frozen=True)
class CircleSymbol:
    x_dot: Fraction
    y_dot: Fraction
    bend: int

    def __post_init__(self):
        if self.bend == 0:
            raise ValueError("bend-zero circles (lines) have no symbol")
        object.__setattr__(self, "x_dot", Fraction(self.x_dot))
        object.__setattr__(self, "y_dot", Fraction(self.y_dot))

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        return self.x_dot / self.bend, self.y_dot / self.bend

    @property
    def radius(self) -> Fraction:
        return Fraction(1, abs(self.bend))

    def sort_key(self):
        return (self.bend, self.x_dot, self.y_dot)

    def __str__(self) -> str:
        return f"({rat_str(self.x_dot)}, {rat_str(self.y_dot)})/{self.bend}"


@dataclass(frozen=True)
class DescartesConfig:
    c1: CircleSymbol
    c2: CircleSymbol
    c3: CircleSymbol
    c4: CircleSymbol

    def __iter__(self) -> Iterator[CircleSymbol]:
        return iter((self.c1, self.c2, self.c3, self.c4))

    def __getitem__(self, i: int) -> CircleSymbol:
        """1-based access, matching the pair labels used by frames."""
        return (self.c1, self.c2, self.c3, self.c4)[i - 1]

    @property
    def bends(self) -> tuple[int, int, int, int]:
        return tuple(c.bend for c in self)

    def is_valid(self) -> bool:
        if not descartes_holds(*self.bends):
            return False
        return all(tangent(a, b) for a, b in combinations(self, 2))

    def replace(self, i: int, circle: CircleSymbol) -> "DescartesConfig":
        circles = list(self)
        circles[i - 1] = circle
        return DescartesConfig(*circles)

    def swap(self, i: int, j: int) -> "DescartesConfig":
        circles = list(self)
        circles[i - 1], circles[j - 1] = circles[j - 1], circles[i - 1]
        return DescartesConfig(*circles)


@dataclass(frozen=True)
class Packing:
    key: GasketKey
    max_bend: int
    circles: tuple[CircleSymbol, ...]
    configs: tuple[DescartesConfig, ...]

    @property
    def enclosing(self) -> CircleSymbol:
        return self.circles[0]

    def __len__(self) -> int:
        return len(self.circles)


def tangent(c1: CircleSymbol, c2: CircleSymbol) -> bool:
    """Exact test of ``(b1 x2 - b2 x1)^2 + (b1 y2 - b2 y1)^2 == (b1 + b2)^2``."""
    b1, b2 = c1.bend, c2.bend
    # clear denominators so the identity is checked over the integers
    x1, x2, y1, y2 = c1.x_dot, c2.x_dot, c1.y_dot, c2.y_dot
    dx_den = x1.denominator * x2.denominator
    dx = b1 * x2.numerator * x1.denominator - b2 * x1.numerator * x2.denominator
    dy_den = y1.denominator * y2.denominator
    dy = b1 * y2.numerator * y1.denominator - b2 * y1.numerator * y2.denominator
    h = b1 + b2
    return (dx * dy_den) ** 2 + (dy * dx_den) ** 2 == (h * dx_den * dy_den) ** 2


def inside(inner: CircleSymbol, outer: CircleSymbol) -> bool:
    """True if the disk of ``inner`` lies within the enclosing circle ``outer``.

    ``outer`` must carry a negative bend.  Compares squared distances, so no
    square roots are taken.
    """
    if outer.bend >= 0:
        raise ValueError("outer circle must have negative bend")
    if inner.bend < 0:
        return inner == outer
    gap = Fraction(-1, outer.bend) - inner.radius
    if gap < 0:
        return False
    (xi, yi), (xo, yo) = inner.center, outer.center
    return (xi - xo) ** 2 + (yi - yo) ** 2 <= gap * gap


def principal_symbols(key: GasketKey) -> tuple[CircleSymbol, ...]:
    """Symbols of the five largest circles, origin at the enclosing center.

    The second circle sits on the negative x-axis and the third one in the
    upper half-plane.
    """
    if key.B == 0:
        raise StripUnsupported("the strip gasket consists of lines and has no symbols")
    return tuple(_to_symbol(t, key.B * key.k) for t in _principal_scaled(key))


def reflect(config: DescartesConfig, i: int) -> DescartesConfig:
    """Replace circle ``i`` (1..4) by its Boyd dual."""
    if not 1 <= i <= 4:
        raise IndexError(f"circle index must be 1..4, got {i}")
    others = [c for j, c in enumerate(config, start=1) if j != i]
    old = config[i]
    new = CircleSymbol(
        2 * sum((c.x_dot for c in others), Fraction(0)) - old.x_dot,
        2 * sum((c.y_dot for c in others), Fraction(0)) - old.y_dot,
        2 * sum(c.bend for c in others) - old.bend,
    )
    return config.replace(i, new)


def root_configs(key: GasketKey) -> tuple[DescartesConfig, DescartesConfig]:
    s0, s1, s2, s3, s4 = principal_symbols(key)
    return DescartesConfig(s0, s1, s2, s3), DescartesConfig(s0, s1, s2, s4)


def generate(key: GasketKey, max_bend: int) -> Packing:
    """All circles of the gasket with bend <= ``max_bend``.

    Breadth-first closure of the two root configurations under the four
    reflections, expanded in order of the new circle's bend (ties broken by
    reduced coordinates).  Reflections producing a bend above ``max_bend``
    are pruned.
    """
    if key.B == 0:
        raise StripUnsupported("the strip gasket consists of lines and has no symbols")
    top = quintet(key).b4
    if max_bend < top:
        raise ValueError(f"max_bend {max_bend} is below the fifth principal bend {top}")

    scale = key.B * key.k
    p0, p1, p2, p3, p4 = _principal_scaled(key)
    # circles are (bend, X, Y) with x_dot = X/scale, y_dot = Y/scale; reflection
    # is integral in these coordinates
    start = [(p0, p1, p2, p3), (p0, p1, p2, p4)]
    seen = {frozenset(c) for c in start}
    order = list(start)
    heap = [(p3, 0, start[0]), (p4, 1, start[1])]
    counter = 2
    while heap:
        _, _, cfg = heapq.heappop(heap)
        tb = cfg[0][0] + cfg[1][0] + cfg[2][0] + cfg[3][0]
        tx = cfg[0][1] + cfg[1][1] + cfg[2][1] + cfg[3][1]
        ty = cfg[0][2] + cfg[1][2] + cfg[2][2] + cfg[3][2]
        for i in range(4):
            b, x, y = cfg[i]
            nb = 2 * (tb - b) - b
            if nb > max_bend:
                continue
            new = (nb, 2 * (tx - x) - x, 2 * (ty - y) - y)
            nxt = cfg[:i] + (new,) + cfg[i + 1:]
            fs = frozenset(nxt)
            if fs in seen:
                continue
            seen.add(fs)
            order.append(nxt)
            heapq.heappush(heap, (new, counter, nxt))
            counter += 1

    symbols = {}
    for cfg in order:
        for t in cfg:
            if t not in symbols:
                symbols[t] = _to_symbol(t, scale)
    circles = tuple(sorted(symbols.values(), key=CircleSymbol.sort_key))
    configs = tuple(DescartesConfig(*(symbols[t] for t in cfg)) for cfg in order)
    return Packing(key, max_bend, circles, configs)


def _principal_scaled(key: GasketKey):
    B, mu, k, n = key.B, key.mu, key.k, key.n
    return (
        (-B, 0, 0),
        (B + k, -k * k, 0),
        (B + n, B * B - mu * mu, 2 * mu * B),
        (B + k + n - 2 * mu, B * B - (k - mu) ** 2, -2 * (k - mu) * B),
        (B + k + n + 2 * mu, B * B - (k + mu) ** 2, 2 * (k + mu) * B),
    )


def _to_symbol(t, scale: int) -> CircleSymbol:
    b, x, y = t
    return CircleSymbol(Fraction(x, scale), Fraction(y, scale), b)
