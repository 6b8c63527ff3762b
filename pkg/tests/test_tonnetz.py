import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from raga_tonnetz.tonnetz import (
    NEIGHBOR_OFFSETS,
    are_adjacent,
    euclidean_position,
    neighbors,
    pitch_class_at,
)

coords = st.integers(min_value=-50, max_value=50)


@pytest.mark.parametrize("p, pc", [((0, 0), 0), ((1, 0), 7), ((0, 1), 4), ((1, -1), 3)])
def test_pitch_class_at(p, pc):
    assert pitch_class_at(p) == pc


def test_neighbors_fixed_order():
    assert neighbors((0, 0)) == [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]
    assert [pitch_class_at(q) for q in neighbors((0, 0))] == [7, 5, 4, 8, 3, 9]


def test_window_edges_have_interval_classes():
    # every edge in a 7x7 window realises a fifth/fourth or a third/sixth
    for u in range(-3, 4):
        for v in range(-3, 4):
            for q in neighbors((u, v)):
                step = (pitch_class_at(q) - pitch_class_at((u, v))) % 12
                assert step in {7, 5, 4, 8, 3, 9}


def test_are_adjacent_examples():
    assert are_adjacent((0, 0), (1, 0))
    assert not are_adjacent((0, 0), (1, 1))
    assert not are_adjacent((0, 0), (0, 0))


@given(coords, coords)
def test_neighbors_are_adjacent(u, v):
    for q in neighbors((u, v)):
        assert are_adjacent((u, v), q) and are_adjacent(q, (u, v))


@given(coords, coords, coords, coords)
def test_adjacency_symmetric_irreflexive(a, b, c, d):
    assert are_adjacent((a, b), (c, d)) == are_adjacent((c, d), (a, b))
    assert not are_adjacent((a, b), (a, b))


@given(coords, coords)
def test_reflection_and_periodicity(u, v):
    pc = pitch_class_at((u, v))
    assert pitch_class_at((-u, -v)) == (12 - pc) % 12
    assert pitch_class_at((u + 12, v)) == pc
    assert pitch_class_at((u + 4, v - 7)) == pc
    assert pitch_class_at((u, v + 3)) == pc


def test_offsets_realise_declared_steps():
    assert {o: pitch_class_at(o) for o in NEIGHBOR_OFFSETS}[(1, 0)] == 7
    assert pitch_class_at((0, 1)) == 4 and pitch_class_at((1, -1)) == 3


def test_euclidean_position():
    assert euclidean_position((0, 0)) == (0.0, 0.0)
    assert euclidean_position((1, 0)) == (1.0, 0.0)
    x, y = euclidean_position((0, 2))
    assert x == 1.0 and y == pytest.approx(math.sqrt(3))


@given(coords, coords)
def test_unit_edge_lengths(u, v):
    p = euclidean_position((u, v))
    for q in neighbors((u, v)):
        e = euclidean_position(q)
        assert math.hypot(e.x - p.x, e.y - p.y) == pytest.approx(1.0)
    assert (p.y > 0) == (v > 0) and (p.y < 0) == (v < 0)
