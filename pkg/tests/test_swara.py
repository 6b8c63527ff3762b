import pytest
from hypothesis import given
from hypothesis import strategies as st

from raga_tonnetz.exceptions import DuplicateSwara, UnknownSwara
from raga_tonnetz.swara import (
    SWARA_ALPHABET,
    PitchSet,
    SwaraDegree,
    format_swara,
    interval_name,
    parse_pitch_set,
    parse_swara,
    pitch_class,
)


@pytest.mark.parametrize(
    "token, pc",
    [("S", 0), ("r", 1), ("R", 2), ("g", 3), ("G", 4), ("m", 5), ("M", 6),
     ("P", 7), ("d", 8), ("D", 9), ("n", 10), ("N", 11)],
)
def test_parse_swara_table(token, pc):
    assert parse_swara(token) == pc
    assert format_swara(pc) == token


@pytest.mark.parametrize("token", ["q", "s", "p", "", "Sa", " S", "SS", None])
def test_parse_swara_rejects(token):
    with pytest.raises(UnknownSwara):
        parse_swara(token)


def test_round_trip_all_twelve():
    assert [parse_swara(format_swara(k)) for k in range(12)] == list(range(12))
    assert len(set(SWARA_ALPHABET)) == 12


def test_parse_pitch_set():
    assert parse_pitch_set("S R g M P D n N") == {0, 2, 3, 6, 7, 9, 10, 11}
    assert parse_pitch_set("S, R, g, M, P, D, n, N") == {0, 2, 3, 6, 7, 9, 10, 11}
    assert parse_pitch_set("S") == {0}
    assert list(parse_pitch_set("N P S")) == [0, 7, 11]


def test_parse_pitch_set_errors():
    with pytest.raises(DuplicateSwara):
        parse_pitch_set("S S")
    with pytest.raises(UnknownSwara):
        parse_pitch_set("S x P")
    with pytest.raises(UnknownSwara):
        parse_pitch_set("   ")


@pytest.mark.parametrize(
    "pc, name", [(0, "Unison"), (1, "Minor Second"), (6, "Augmented Fourth"),
                 (7, "Perfect Fifth"), (11, "Major Seventh")],
)
def test_interval_name(pc, name):
    assert interval_name(pc) == name


def test_degrees():
    assert [d.abbreviation for d in SwaraDegree] == ["Sa", "Re", "Ga", "Ma", "Pa", "Dha", "Ni"]
    assert SwaraDegree.of(parse_swara("D")) is SwaraDegree.DHA
    assert SwaraDegree.of(parse_swara("M")) is SwaraDegree.MA
    assert SwaraDegree.from_name("dha") is SwaraDegree.DHA


@given(st.lists(st.sampled_from(SWARA_ALPHABET), min_size=1, unique=True))
def test_cardinality_matches_distinct_tokens(tokens):
    ps = parse_pitch_set(" ".join(tokens))
    assert len(ps) == len(tokens)
    assert all(0 <= pc <= 11 for pc in ps)
    assert list(ps) == sorted(ps)


@given(st.integers(min_value=-1000, max_value=1000))
def test_pitch_class_reduces(x):
    assert 0 <= pitch_class(x) <= 11
    assert PitchSet([x]) == PitchSet([x + 12])


def test_inverted():
    assert PitchSet([0, 4, 7]).inverted() == {0, 8, 5}
