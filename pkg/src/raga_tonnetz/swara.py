"""Pitch classes and the twelve-symbol swara alphabet.

Pitch classes are plain ``int`` values in ``0..11`` (semitones above Sa).
Uppercase abbreviations are shuddh (or tivra for ``M``), lowercase are komal,
except ``m`` which is shuddh Ma.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, Iterator

from .exceptions import DuplicateSwara, UnknownSwara

N_PITCH_CLASSES = 12

SWARA_ALPHABET = ("S", "r", "R", "g", "G", "m", "M", "P", "d", "D", "n", "N")

NOTE_NAMES = (
    "Sa",
    "Komal Re",
    "Shuddh Re",
    "Komal Ga",
    "Shuddh Ga",
    "Shuddh Ma",
    "Tivra Ma",
    "Pa",
    "Komal Dha",
    "Shuddh Dha",
    "Komal Ni",
    "Shuddh Ni",
)

INTERVAL_NAMES = (
    "Unison",
    "Minor Second",
    "Major Second",
    "Minor Third",
    "Major Third",
    "Perfect Fourth",
    "Augmented Fourth",
    "Perfect Fifth",
    "Minor Sixth",
    "Major Sixth",
    "Minor Seventh",
    "Major Seventh",
)

_SWARA_TO_PC = {token: pc for pc, token in enumerate(SWARA_ALPHABET)}
_SEPARATORS = re.compile(r"[\s,]+")


def pitch_class(value: int) -> int:
    """Reduce any integer to its pitch class in ``0..11``."""
    return int(value) % N_PITCH_CLASSES


class SwaraDegree(Enum):
    """The seven scale degrees, in order."""

    SA = 1
    RE = 2
    GA = 3
    MA = 4
    PA = 5
    DHA = 6
    NI = 7

    @property
    def abbreviation(self) -> str:
        return self.name.capitalize()

    @classmethod
    def from_name(cls, name: str) -> SwaraDegree:
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise UnknownSwara(name) from None

    @classmethod
    def of(cls, pc: int) -> SwaraDegree:
        """Scale degree that a chromatic pitch class is a variant of."""
        return _DEGREE_OF_PC[pitch_class(pc)]


_DEGREE_OF_PC = {
    0: SwaraDegree.SA,
    1: SwaraDegree.RE,
    2: SwaraDegree.RE,
    3: SwaraDegree.GA,
    4: SwaraDegree.GA,
    5: SwaraDegree.MA,
    6: SwaraDegree.MA,
    7: SwaraDegree.PA,
    8: SwaraDegree.DHA,
    9: SwaraDegree.DHA,
    10: SwaraDegree.NI,
    11: SwaraDegree.NI,
}


class PitchSet:
    """Immutable set of pitch classes that iterates in ascending order."""

    __slots__ = ("_members",)

    def __init__(self, members: Iterable[int] = ()):
        self._members = tuple(sorted({pitch_class(m) for m in members}))

    @property
    def members(self) -> tuple[int, ...]:
        return self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, pc: object) -> bool:
        return pc in self._members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PitchSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return set(self._members) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"PitchSet({{{', '.join(map(str, self._members))}}})"

    def __str__(self) -> str:
        return format_pitch_set(self)

    def inverted(self) -> PitchSet:
        """The set reflected about Sa: ``k -> (12 - k) mod 12``."""
        return PitchSet(-m for m in self._members)


def parse_swara(token: str) -> int:
    """Return the chromatic degree of a swara abbreviation.

    >>> parse_swara("M")
    6
    """
    try:
        return _SWARA_TO_PC[token]
    except (KeyError, TypeError):
        raise UnknownSwara(token) from None


def format_swara(pc: int) -> str:
    return SWARA_ALPHABET[pitch_class(pc)]


def parse_pitch_set(text: str) -> PitchSet:
    """Parse space- and/or comma-separated swara tokens into a :class:`PitchSet`.

    Repeating a pitch class raises :class:`DuplicateSwara` instead of being
    silently merged, so dataset typos surface.
    """
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    if not tokens:
        raise UnknownSwara(text)
    seen: set[int] = set()
    for token in tokens:
        pc = parse_swara(token)
        if pc in seen:
            raise DuplicateSwara(token)
        seen.add(pc)
    return PitchSet(seen)


def format_pitch_set(pcs: Iterable[int]) -> str:
    return " ".join(format_swara(pc) for pc in sorted(set(pitch_class(p) for p in pcs)))


def interval_name(pc: int) -> str:
    return INTERVAL_NAMES[pitch_class(pc)]


def note_name(pc: int) -> str:
    return NOTE_NAMES[pitch_class(pc)]
