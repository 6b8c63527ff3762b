"""Tonnetz lattice geometry.

A lattice point ``(u, v)`` is ``u`` steps along the perfect-fifth axis
(horizontal, left to right) and ``v`` steps along the major-third axis
(bottom left to top right). The remaining diagonal, ``(+1, -1)``, is the
minor third running top left to bottom right.
"""

from __future__ import annotations

import math
from typing import NamedTuple

FIFTH = 7
MAJOR_THIRD = 4

NEIGHBOR_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))

_OFFSET_SET = frozenset(NEIGHBOR_OFFSETS)
_SQRT3_2 = math.sqrt(3) / 2


class LatticePoint(NamedTuple):
    u: int
    v: int

    def __neg__(self) -> LatticePoint:
        return LatticePoint(-self.u, -self.v)

    def shifted(self, du: int, dv: int) -> LatticePoint:
        return LatticePoint(self.u + du, self.v + dv)


class EuclideanPosition(NamedTuple):
    x: float
    y: float


ORIGIN = LatticePoint(0, 0)


def pitch_class_at(p) -> int:
    return (FIFTH * p[0] + MAJOR_THIRD * p[1]) % 12


def neighbors(p) -> list[LatticePoint]:
    u, v = p
    return [LatticePoint(u + du, v + dv) for du, dv in NEIGHBOR_OFFSETS]


def are_adjacent(a, b) -> bool:
    return (a[0] - b[0], a[1] - b[1]) in _OFFSET_SET


def euclidean_position(p) -> EuclideanPosition:
    """Render-plane position with unit fifth spacing and 60 degree axes."""
    u, v = p
    return EuclideanPosition(u + v / 2, v * _SQRT3_2)


def lattice_norm(p) -> int:
    """Squared Euclidean length of ``p`` in the 60 degree lattice metric."""
    u, v = p
    return u * u + u * v + v * v
