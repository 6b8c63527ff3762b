"""Most compact embedding of a pitch set on the tonnetz.

An embedding puts each pitch class of a set on one lattice point carrying
that pitch class. Compactness is the number of lattice edges between placed
points; :func:`solve_embedding` returns every embedding attaining the maximum
within a finite search window, found by branch and bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .classify import Heaviness, classify_embedding
from .exceptions import EmptyPitchSet
from .swara import pitch_class
from .tonnetz import (
    FIFTH,
    ORIGIN,
    LatticePoint,
    are_adjacent,
    lattice_norm,
    pitch_class_at,
)

# pitch-class differences realised by some lattice edge
EDGE_INTERVALS = frozenset({3, 4, 5, 7, 8, 9})


@dataclass(frozen=True)
class SearchWindow:
    """Candidate points satisfy ``|u| <= max_abs_u`` and ``|v| <= max_abs_v``."""

    max_abs_u: int = 3
    max_abs_v: int = 3

    def __post_init__(self):
        if self.max_abs_u < 1 or self.max_abs_v < 1:
            raise ValueError(
                f"window bounds must be >= 1, got ({self.max_abs_u}, {self.max_abs_v})"
            )

    @classmethod
    def square(cls, n: int) -> SearchWindow:
        return cls(n, n)

    def __contains__(self, p) -> bool:
        return abs(p[0]) <= self.max_abs_u and abs(p[1]) <= self.max_abs_v

    def points(self) -> Iterator[LatticePoint]:
        """All window points in lexicographic ``(u, v)`` order."""
        for u in range(-self.max_abs_u, self.max_abs_u + 1):
            for v in range(-self.max_abs_v, self.max_abs_v + 1):
                yield LatticePoint(u, v)


DEFAULT_WINDOW = SearchWindow()


@dataclass(frozen=True)
class Embedding:
    """One lattice point per pitch class, stored sorted by pitch class."""

    items: tuple[tuple[int, LatticePoint], ...]

    def __post_init__(self):
        pcs = [pc for pc, _ in self.items]
        if pcs != sorted(set(pcs)):
            raise ValueError("embedding items must be sorted by unique pitch class")
        for pc, p in self.items:
            if pitch_class_at(p) != pc:
                raise ValueError(f"point {tuple(p)} does not carry pitch class {pc}")

    @classmethod
    def from_mapping(cls, placement: Mapping[int, Iterable[int]]) -> Embedding:
        return cls(
            tuple(
                sorted((pitch_class(pc), LatticePoint(*p)) for pc, p in placement.items())
            )
        )

    @property
    def placement(self) -> dict[int, LatticePoint]:
        return dict(self.items)

    @property
    def pitch_classes(self) -> tuple[int, ...]:
        return tuple(pc for pc, _ in self.items)

    @property
    def points(self) -> tuple[LatticePoint, ...]:
        return tuple(p for _, p in self.items)

    def __getitem__(self, pc: int) -> LatticePoint:
        return self.placement[pc]

    def __len__(self) -> int:
        return len(self.items)

    def norm(self) -> int:
        return sum(lattice_norm(p) for p in self.points)

    def reflected(self) -> Embedding:
        """Point reflection through the origin; embeds the inverted set."""
        return Embedding.from_mapping({-pc: -p for pc, p in self.items})

    def flipped_vertically(self):
        """Points with ``v`` negated. Not an embedding of anything in general."""
        return tuple(LatticePoint(u, -v) for u, v in self.points)


@dataclass(frozen=True)
class EmbeddingResult:
    """Every maximally connected embedding of a set, plus the chosen one.

    ``heaviness`` is the headline label: the canonical embedding's label,
    except that it is Neutral when the optima tied with the canonical one on
    :func:`tie_rank` include both a top-heavy and a bottom-heavy shape.
    ``ambiguous_heaviness`` is the weaker flag that *any* two optima disagree.
    """

    optima: tuple[Embedding, ...]
    edge_count: int
    canonical: Embedding
    ambiguous_heaviness: bool
    window: SearchWindow = field(default=DEFAULT_WINDOW)

    @property
    def heaviness(self) -> Heaviness:
        return headline_heaviness(self.optima, self.canonical)

    @property
    def tied(self) -> tuple[Embedding, ...]:
        """Optima indistinguishable from the canonical one except by order."""
        rank = tie_rank(self.canonical)
        return tuple(e for e in self.optima if tie_rank(e) == rank)

    def optimum_labels(self) -> list[Heaviness]:
        return [classify_embedding(e) for e in self.optima]


def candidate_points(pc: int, window: SearchWindow = DEFAULT_WINDOW) -> list[LatticePoint]:
    pc = pitch_class(pc)
    return [p for p in window.points() if pitch_class_at(p) == pc]


def edge_count(embedding) -> int:
    points = list(getattr(embedding, "points", embedding))
    return sum(
        are_adjacent(points[i], points[j])
        for i in range(len(points))
        for j in range(i + 1, len(points))
    )


def anchor_of(pcs: Iterable[int], window: SearchWindow = DEFAULT_WINDOW) -> tuple[int, LatticePoint]:
    """Pitch class held fixed during search, and where it sits.

    Sa sits at the origin. A set without Sa anchors its smallest member at that
    member's lexicographically smallest candidate point.
    """
    pcs = sorted(set(pcs))
    if not pcs:
        raise EmptyPitchSet()
    if pcs[0] == 0:
        return 0, ORIGIN
    return pcs[0], candidate_points(pcs[0], window)[0]


def tie_rank(embedding: Embedding) -> tuple[int, int]:
    """Geometric preference among equally connected embeddings (lower wins).

    First, Pa sitting a fifth right of Sa, on the 0-7 axis the classification
    is measured against; then the summed squared lattice norm.
    """
    pa = embedding.placement.get(FIFTH)
    pa_off_axis = 0 if pa is None or pa == (1, 0) else 1
    return pa_off_axis, embedding.norm()


def canonical_key(embedding: Embedding):
    # Within a tie, a decisively top- or bottom-heavy shape beats a neutral one.
    neutral = classify_embedding(embedding) is Heaviness.NEUTRAL
    return (*tie_rank(embedding), neutral, embedding.items)


def canonicalize(optima: Iterable[Embedding]) -> Embedding:
    """Deterministic representative of equally compact embeddings."""
    optima = list(optima)
    if not optima:
        raise ValueError("no embeddings to choose from")
    return min(optima, key=canonical_key)


def headline_heaviness(optima: Iterable[Embedding], canonical: Embedding | None = None) -> Heaviness:
    """Label of the canonical embedding, or Neutral on an undecidable tie.

    The tie is undecidable when embeddings sharing the canonical one's
    :func:`tie_rank` include both a top-heavy and a bottom-heavy shape.
    """
    optima = list(optima)
    if canonical is None:
        canonical = canonicalize(optima)
    rank = tie_rank(canonical)
    labels = {classify_embedding(e) for e in optima if tie_rank(e) == rank}
    if {Heaviness.TOP_HEAVY, Heaviness.BOTTOM_HEAVY} <= labels:
        return Heaviness.NEUTRAL
    return classify_embedding(canonical)


def _search_order(rest: list[int], placed: list[int]) -> list[int]:
    # Greedy: next place the pitch class with the most edge intervals to
    # those already ordered, so the bound tightens early.
    order: list[int] = []
    pool = list(rest)
    fixed = list(placed)
    while pool:
        best = max(
            pool,
            key=lambda pc: (
                sum((pc - q) % 12 in EDGE_INTERVALS for q in fixed + order),
                -pc,
            ),
        )
        order.append(best)
        pool.remove(best)
    return order


def _branch_and_bound(anchor_point, order, candidates):
    """All candidate assignments for ``order`` that maximise the edge count."""
    n = len(order)
    # Max possible edges among unplaced notes starting at depth d.
    pair_bound = [0] * (n + 1)
    for d in range(n - 1, -1, -1):
        pair_bound[d] = pair_bound[d + 1] + sum(
            (order[d] - order[j]) % 12 in EDGE_INTERVALS for j in range(d + 1, n)
        )

    chosen: list[LatticePoint] = [anchor_point]
    best = -1
    found: list[tuple[LatticePoint, ...]] = []

    def gain(p) -> int:
        return sum(are_adjacent(p, q) for q in chosen)

    def visit(depth: int, edges: int):
        nonlocal best, found
        if depth == n:
            if edges > best:
                best, found = edges, [tuple(chosen[1:])]
            elif edges == best:
                found.append(tuple(chosen[1:]))
            return
        optimistic = edges + pair_bound[depth]
        for d in range(depth, n):
            optimistic += max(gain(p) for p in candidates[d])
        if optimistic < best:
            return
        for p in candidates[depth]:
            g = gain(p)
            chosen.append(p)
            visit(depth + 1, edges + g)
            chosen.pop()

    visit(0, 0)
    return best, found


def solve_embedding(pitch_set, window: SearchWindow = DEFAULT_WINDOW) -> EmbeddingResult:
    """Exact search for every maximally connected embedding within ``window``."""
    pcs = sorted(set(pitch_class(pc) for pc in pitch_set))
    if not pcs:
        raise EmptyPitchSet()
    anchor, anchor_point = anchor_of(pcs, window)
    rest = [pc for pc in pcs if pc != anchor]
    order = _search_order(rest, [anchor])
    candidates = [candidate_points(pc, window) for pc in order]
    for pc, cands in zip(order, candidates):
        if not cands:
            raise ValueError(f"pitch class {pc} has no lattice point inside {window}")

    best, found = _branch_and_bound(anchor_point, order, candidates)
    optima = sorted(
        {
            Embedding.from_mapping({anchor: anchor_point, **dict(zip(order, points))})
            for points in found
        },
        key=canonical_key,
    )
    labels = {classify_embedding(e) for e in optima}
    return EmbeddingResult(
        optima=tuple(optima),
        edge_count=max(best, 0),
        canonical=optima[0],
        ambiguous_heaviness=len(labels) > 1,
        window=window,
    )
