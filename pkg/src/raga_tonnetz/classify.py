"""Top-heavy / bottom-heavy / neutral classification about the 0-7 axis."""

from __future__ import annotations

from enum import Enum
from typing import Iterable, NamedTuple


class Heaviness(Enum):
    TOP_HEAVY = "TopHeavy"
    BOTTOM_HEAVY = "BottomHeavy"
    NEUTRAL = "Neutral"

    def __str__(self) -> str:
        return self.value

    def flipped(self) -> Heaviness:
        return _FLIP[self]


_FLIP = {
    Heaviness.TOP_HEAVY: Heaviness.BOTTOM_HEAVY,
    Heaviness.BOTTOM_HEAVY: Heaviness.TOP_HEAVY,
    Heaviness.NEUTRAL: Heaviness.NEUTRAL,
}


class HeavinessCounts(NamedTuple):
    above: int
    below: int
    on_axis: int

    @property
    def total(self) -> int:
        return self.above + self.below + self.on_axis


def heaviness_counts(embedding) -> HeavinessCounts:
    """Count placed notes above, below and on the horizontal Sa-Pa axis.

    Accepts an :class:`~raga_tonnetz.embed.Embedding` or any iterable of
    lattice points.
    """
    points: Iterable = getattr(embedding, "points", embedding)
    above = below = on_axis = 0
    for _, v in points:
        if v > 0:
            above += 1
        elif v < 0:
            below += 1
        else:
            on_axis += 1
    return HeavinessCounts(above, below, on_axis)


def classify(counts: HeavinessCounts) -> Heaviness:
    # on-axis notes carry no weight either way
    if counts.above > counts.below:
        return Heaviness.TOP_HEAVY
    if counts.below > counts.above:
        return Heaviness.BOTTOM_HEAVY
    return Heaviness.NEUTRAL


def classify_embedding(embedding) -> Heaviness:
    return classify(heaviness_counts(embedding))
