"""Enumeration of irreducible integral Apollonian gaskets.

Every irreducible integral gasket corresponds to exactly one non-negative
solution of ``B**2 + mu**2 == k*n`` with ``3*mu**2 <= B**2``,
``2*mu <= k <= n`` and ``gcd(B, k, n) == 1``.  ``B`` is the bend of the
enclosing circle (carried as ``-B``), and the five largest disks have
bends ``(-B, B+k, B+n, B+k+n-2mu, B+k+n+2mu)``.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .numerics import gcd3


class MasterEquationViolation(ValueError):
    pass


class SymmetryClass(Enum):
    STRIP = "strip"
    WINDOW = "window"
    ODD = "odd"
    EVEN = "even"
    EVEN_STAR = "even*"
    SKEW = "skew"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class GasketKey:
    B: int
    mu: int
    k: int
    n: int

    def __post_init__(self):
        problems = self.violations()
        if problems:
            raise MasterEquationViolation(
                f"invalid key ({self.B},{self.mu},{self.k},{self.n}): " + "; ".join(problems)
            )

    def violations(self) -> list[str]:
        B, mu, k, n = self.B, self.mu, self.k, self.n
        out = []
        if min(B, mu, k, n) < 0:
            out.append("all of B, mu, k, n must be non-negative")
        if B * B + mu * mu != k * n:
            out.append(f"B^2+mu^2 = {B * B + mu * mu} != k*n = {k * n}")
        if 3 * mu * mu > B * B:
            out.append(f"3mu^2 = {3 * mu * mu} > B^2 = {B * B}")
        if not 2 * mu <= k <= n:
            out.append(f"2mu <= k <= n fails ({2 * mu} <= {k} <= {n})")
        return out

    @classmethod
    def parse(cls, text: str) -> "GasketKey":
        """Parse ``"B,mu,k,n"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise MasterEquationViolation(f"expected four integers B,mu,k,n, got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise MasterEquationViolation(f"non-integer entry in key {text!r}") from None
        return cls(*values)

    @property
    def is_strip(self) -> bool:
        return self.B == 0

    @property
    def is_irreducible(self) -> bool:
        return gcd3(self.B, self.k, self.n) == 1

    # geometric parameters of the strip preimage (B >= 1)
    @property
    def rho(self) -> Fraction:
        return Fraction(self.k, self.B * self.B)

    @property
    def h(self) -> Fraction:
        return Fraction(2 * self.mu, self.B * self.B)

    @property
    def m(self) -> int:
        return 2 * self.mu

    def scaled(self, factor: int) -> "GasketKey":
        return GasketKey(factor * self.B, factor * self.mu, factor * self.k, factor * self.n)

    def __str__(self) -> str:
        return f"{self.B},{self.mu},{self.k},{self.n}"


@dataclass(frozen=True)
class BendQuintet:
    """Bends of the enclosing circle and the four largest disks inside it."""

    b0: int
    b1: int
    b2: int
    b3: int
    b4: int

    def __iter__(self):
        return iter((self.b0, self.b1, self.b2, self.b3, self.b4))

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.b0, self.b1, self.b2, self.b3, self.b4)

    def scaled(self, factor: int) -> "BendQuintet":
        return BendQuintet(*(factor * b for b in self))


@dataclass(frozen=True)
class GasketRecord:
    key: GasketKey
    quintet: BendQuintet
    shift: Fraction
    symmetry: SymmetryClass
    reducible: bool = False


STRIP_KEY = GasketKey(0, 0, 0, 1)
WINDOW_KEY = GasketKey(1, 0, 1, 1)


def solve_master(B: int) -> list[GasketKey]:
    """All irreducible keys with root bend ``B``, ordered by (mu, k)."""
    if B < 0:
        raise ValueError(f"root bend must be non-negative, got {B}")
    if B == 0:
        return [STRIP_KEY]
    keys = []
    mu = 0
    while 3 * mu * mu <= B * B:
        target = B * B + mu * mu
        for k in range(max(2 * mu, 1), math.isqrt(target) + 1):
            if target % k:
                continue
            n = target // k
            if gcd3(B, k, n) == 1:
                keys.append(GasketKey(B, mu, k, n))
        mu += 1
    return keys


def quintet(key: GasketKey) -> BendQuintet:
    B, mu, k, n = key.B, key.mu, key.k, key.n
    return BendQuintet(-B, B + k, B + n, B + k + n - 2 * mu, B + k + n + 2 * mu)


def key_from_quintet(q: BendQuintet | Sequence[int]) -> GasketKey:
    b0, b1, b2, b3, b4 = tuple(q)
    B = -b0
    k = b1 - B
    n = b2 - B
    if b3 + b4 != 2 * (b0 + b1 + b2):
        raise MasterEquationViolation(
            f"Boyd sum fails: {b3}+{b4} != 2({b0}+{b1}+{b2})"
        )
    if (b4 - b3) % 4:
        raise MasterEquationViolation(f"b4-b3 = {b4 - b3} is not divisible by 4")
    mu = (b4 - b3) // 4
    return GasketKey(B, mu, k, n)


def shift(key: GasketKey) -> Fraction:
    """Offset of the strip preimage in units of its radius, ``2mu/k``."""
    if key.k == 0:
        return Fraction(0)
    return Fraction(2 * key.mu, key.k)


def classify(key: GasketKey) -> SymmetryClass:
    if key.B == 0:
        return SymmetryClass.STRIP
    if key == WINDOW_KEY:
        return SymmetryClass.WINDOW
    if key.mu == 0:
        return SymmetryClass.ODD
    if 2 * key.mu == key.k:
        return SymmetryClass.EVEN
    if key.k == key.n:
        return SymmetryClass.EVEN_STAR
    return SymmetryClass.SKEW


def make_record(key: GasketKey, reducible: bool = False) -> GasketRecord:
    return GasketRecord(key, quintet(key), shift(key), classify(key), reducible)


def _sort_key(rec: GasketRecord):
    return (rec.key.B, rec.key.mu, rec.key.k)


def enumerate_gaskets(
    b_max: int,
    irreducible_only: bool = True,
    workers: Optional[int] = None,
) -> list[GasketRecord]:
    """Records for every gasket with root bend ``0..b_max`` in canonical order.

    With ``irreducible_only=False`` the integer multiples of each irreducible
    gasket whose root bend stays within ``b_max`` are included and flagged
    as reducible.  ``workers > 1`` spreads the per-bend solves over processes.
    """
    if b_max < 0:
        raise ValueError(f"b_max must be non-negative, got {b_max}")
    bends = range(b_max + 1)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_bend: Iterable[list[GasketKey]] = list(pool.map(solve_master, bends))
    else:
        per_bend = map(solve_master, bends)
    keys = [key for ks in per_bend for key in ks]
    records = [make_record(key) for key in keys]
    if not irreducible_only:
        for key in keys:
            if key.B == 0:
                # multiples of the strip never exceed any root-bend bound
                continue
            factor = 2
            while factor * key.B <= b_max:
                records.append(make_record(key.scaled(factor), reducible=True))
                factor += 1
        records.sort(key=_sort_key)
    return records


def workers_from_env(default: int = 1) -> int:
    value = os.environ.get("APOLLON_THREADS")
    if not value:
        return default
    try:
        return max(1, int(value))
    except ValueError:
        return default
