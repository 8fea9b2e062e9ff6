"""Triangle triples of tangent circle pairs and their frame recurrence.

For tangent circles ``i`` and ``j`` the frame entries are

    delta_ij = x_dot_i * b_j - x_dot_j * b_i
    gamma_ij = y_dot_i * b_j - y_dot_j * b_i
    h_ij     = b_i + b_j

and ``delta**2 + gamma**2 == h**2``.  A frame stores the six pairs of a
Descartes configuration in the order ``PAIRS``.  Reflecting one circle maps
the frame linearly, with integer coefficients, onto the frame of the new
configuration; the matrices here are derived from that linear rule rather
than transcribed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .enumeration import GasketKey
from .numerics import is_integral
from .symbols import CircleSymbol, DescartesConfig, reflect

PAIRS: tuple[tuple[int, int], ...] = ((4, 1), (4, 2), (4, 3), (1, 2), (2, 3), (3, 1))
PAIR_LABELS = tuple(f"{i}{j}" for i, j in PAIRS)

IntMatrix = tuple[tuple[int, ...], ...]


class NotTangent(ValueError):
    pass


@dataclass(frozen=True)
class TriangleTriple:
    delta: Fraction
    gamma: Fraction
    h: int

    @property
    def is_integral(self) -> bool:
        return is_integral(self.delta) and is_integral(self.gamma)

    @property
    def is_pythagorean(self) -> bool:
        return self.delta ** 2 + self.gamma ** 2 == self.h ** 2

    def reversed(self) -> "TriangleTriple":
        return TriangleTriple(-self.delta, -self.gamma, self.h)


def triple(c1: CircleSymbol, c2: CircleSymbol) -> TriangleTriple:
    """``(b1 x2 - b2 x1, b1 y2 - b2 y1, b1 + b2)`` for tangent circles."""
    t = TriangleTriple(
        c1.bend * c2.x_dot - c2.bend * c1.x_dot,
        c1.bend * c2.y_dot - c2.bend * c1.y_dot,
        c1.bend + c2.bend,
    )
    if not t.is_pythagorean:
        raise NotTangent(f"{c1} and {c2} are not tangent")
    return t


@dataclass(frozen=True)
class Frame:
    deltas: tuple[Fraction, ...]
    gammas: tuple[Fraction, ...]
    hs: tuple[int, ...]

    @property
    def triples(self) -> tuple[TriangleTriple, ...]:
        return tuple(TriangleTriple(d, g, h) for d, g, h in zip(self.deltas, self.gammas, self.hs))

    def __getitem__(self, pair: str) -> TriangleTriple:
        """Triple by label, e.g. ``frame["41"]``; reversed labels flip the sign."""
        if pair in PAIR_LABELS:
            return self.triples[PAIR_LABELS.index(pair)]
        return self[pair[::-1]].reversed()

    @property
    def is_integral(self) -> bool:
        return all(t.is_integral for t in self.triples)


def frame_of(config: DescartesConfig) -> Frame:
    # pair (i, j) is the triple of (c_j, c_i) in the b1*x2 - b2*x1 convention
    triples = [triple(config[j], config[i]) for i, j in PAIRS]
    return Frame(
        tuple(t.delta for t in triples),
        tuple(t.gamma for t in triples),
        tuple(t.h for t in triples),
    )


@dataclass(frozen=True)
class TransitionMatrix:
    """Integer 6x6 maps on the delta/gamma vectors and on the h vector."""

    delta: IntMatrix
    h: IntMatrix

    def apply(self, frame: Frame) -> Frame:
        return Frame(
            _matvec(self.delta, frame.deltas),
            _matvec(self.delta, frame.gammas),
            _matvec(self.h, frame.hs),
        )

    def compose(self, other: "TransitionMatrix") -> "TransitionMatrix":
        """Matrix of applying ``other`` first, then ``self``."""
        return TransitionMatrix(_matmul(self.delta, other.delta), _matmul(self.h, other.h))


def _matvec(m: IntMatrix, v: Sequence):
    return tuple(sum((a * x for a, x in zip(row, v) if a), type(v[0])(0)) for row in m)


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(sum(a[r][t] * b[t][c] for t in range(6)) for c in range(6)) for r in range(6)
    )


def _stored(r: int, s: int) -> tuple[int, int]:
    """Index and orientation sign of pair (r, s) in ``PAIRS``."""
    if (r, s) in PAIRS:
        return PAIRS.index((r, s)), 1
    return PAIRS.index((s, r)), -1


def _derive(new_circles: Sequence[Sequence[int]]) -> TransitionMatrix:
    """Transition matrix for a configuration whose slot ``p`` holds the old
    circles combined with coefficients ``new_circles[p-1]``.

    Reduced coordinates and bends transform by the same coefficients, so the
    delta entries follow from bilinearity.  The h entries are built from
    h_rq = b_r + b_q, which requires one side of every new pair to be an
    unchanged old circle.
    """
    delta_rows, h_rows = [], []
    for p, q in PAIRS:
        u, v = new_circles[p - 1], new_circles[q - 1]
        d = [0] * 6
        for r in range(1, 5):
            for s in range(1, 5):
                c = u[r - 1] * v[s - 1]
                if r == s or not c:
                    continue
                idx, sign = _stored(r, s)
                d[idx] += sign * c
        delta_rows.append(tuple(d))

        hrow = [0] * 6
        if _is_unit(v):
            moving, fixed = u, v.index(1) + 1
        elif _is_unit(u):
            moving, fixed = v, u.index(1) + 1
        else:
            raise ValueError("h transition needs one unchanged circle per pair")
        residual = 1 + moving[fixed - 1] - sum(c for r, c in enumerate(moving, 1) if r != fixed)
        if residual:
            raise ValueError("h entry is not an integer combination of frame entries")
        for r in range(1, 5):
            if r != fixed and moving[r - 1]:
                hrow[_stored(r, fixed)[0]] += moving[r - 1]
        h_rows.append(tuple(hrow))
    return TransitionMatrix(tuple(delta_rows), tuple(h_rows))


def _is_unit(v: Sequence[int]) -> bool:
    return sorted(v) == [0, 0, 0, 1]


def _reflected_slots(i: int) -> list[list[int]]:
    slots = [[int(r == p) for r in range(4)] for p in range(4)]
    slots[i - 1] = [2 if r != i - 1 else -1 for r in range(4)]
    return slots


@lru_cache(maxsize=None)
def reflection_matrix(i: int) -> TransitionMatrix:
    """Frame map for replacing circle ``i`` in place (labels unchanged)."""
    if not 1 <= i <= 4:
        raise IndexError(f"circle index must be 1..4, got {i}")
    return _derive(_reflected_slots(i))


@lru_cache(maxsize=None)
def relabeled_matrix(i: int, perm: tuple[int, ...]) -> TransitionMatrix:
    """Replace circle ``i``, then put old slot ``perm[p-1]`` into slot ``p``."""
    slots = _reflected_slots(i)
    return _derive([slots[perm[p] - 1] for p in range(4)])


def walk_matrix(j: int) -> TransitionMatrix:
    """Replace circle 4, then swap the new circle with circle ``j`` (1..3).

    Circle ``j`` thereby lands in slot 4, so repeated steps descend into the
    packing along a non-backtracking path.
    """
    if not 1 <= j <= 3:
        raise IndexError(f"walk index must be 1..3, got {j}")
    perm = [1, 2, 3, 4]
    perm[j - 1], perm[3] = perm[3], perm[j - 1]
    return relabeled_matrix(4, tuple(perm))


def transition_matrices() -> tuple[TransitionMatrix, TransitionMatrix, TransitionMatrix]:
    """The three walk transitions, one per inner circle moved into slot 4."""
    return walk_matrix(1), walk_matrix(2), walk_matrix(3)


def walk_step(config: DescartesConfig, j: int) -> DescartesConfig:
    """Configuration-side counterpart of ``walk_matrix(j)``."""
    return reflect(config, 4).swap(j, 4)


def frame_transition(frame: Frame, i: int) -> Frame:
    """Frame after replacing circle ``i``, from the frame entries alone."""
    return reflection_matrix(i).apply(frame)


def integral_frames_predicate(key: GasketKey) -> bool:
    """k | 2B^2: sufficient for every triple of the gasket to be integral."""
    if key.B < 1:
        raise ValueError("predicate is defined for B >= 1")
    return (2 * key.B * key.B) % key.k == 0


def all_relabelings() -> list[tuple[int, tuple[int, ...]]]:
    return [(i, perm) for i in range(1, 5) for perm in permutations(range(1, 5))]
