"""The raga dataset: a line-oriented text format and its validation.

Each data line reads::

    name | pitch set | day|night | prahar [| key=value ...]

``#`` starts a comment, blank lines are ignored and the optional keys are
``vadi``, ``samvadi`` (swara tokens) and ``source`` (free text). Malformed
lines become :class:`Diagnostic` errors and are skipped, so one bad record
never hides the rest of the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import NamedTuple, Optional

from .exceptions import DuplicateSwara, UnknownRaga, UnknownSwara
from .swara import PitchSet, SwaraDegree, parse_pitch_set, parse_swara

MIN_NOTES = 5
DEFAULT_CORPUS = "ragas.txt"


class Period(Enum):
    DAY = "day"
    NIGHT = "night"

    def __str__(self) -> str:
        return self.name.capitalize()


_PRAHAR_HOURS = {
    Period.DAY: ("6am-9am", "9am-12pm", "12pm-3pm", "3pm-6pm"),
    Period.NIGHT: ("6pm-9pm", "9pm-12am", "12am-3am", "3am-6am"),
}
_ORDINALS = ("1st", "2nd", "3rd", "4th")


class Prahar(NamedTuple):
    period: Period
    index: int

    @property
    def hours(self) -> str:
        return _PRAHAR_HOURS[self.period][self.index - 1]

    @property
    def label(self) -> str:
        return f"{_ORDINALS[self.index - 1]} ({self.hours})"

    def __str__(self) -> str:
        return f"{self.period} {self.index}"


ALL_PRAHARS = tuple(Prahar(period, i) for period in Period for i in range(1, 5))


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    record_name: str
    message: str
    line: Optional[int] = None

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{self.severity.value}: {where}{self.record_name}: {self.message}"

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR


@dataclass(frozen=True)
class RagaRecord:
    name: str
    pitch_set: PitchSet
    prahar: Prahar
    vadi: Optional[SwaraDegree] = None
    samvadi: Optional[SwaraDegree] = None
    source_note: str = ""

    @property
    def period(self) -> Period:
        return self.prahar.period


class _LineError(Exception):
    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


def _parse_degree(key: str, token: str) -> SwaraDegree:
    try:
        return SwaraDegree.of(parse_swara(token.strip()))
    except UnknownSwara:
        raise _LineError("UnknownSwara", f"{key}: unknown swara {token.strip()!r}") from None


def _parse_line(fields: list[str]) -> RagaRecord:
    if len(fields) < 4:
        raise _LineError("Malformed", f"expected at least 4 '|'-separated fields, got {len(fields)}")
    name, notes, period_text, prahar_text = fields[:4]
    if not name:
        raise _LineError("Malformed", "empty raga name")
    try:
        pitch_set = parse_pitch_set(notes)
    except UnknownSwara as exc:
        raise _LineError("UnknownSwara", str(exc)) from None
    except DuplicateSwara as exc:
        raise _LineError("DuplicateSwara", str(exc)) from None
    if len(pitch_set) < MIN_NOTES:
        raise _LineError(
            "TooFewNotes", f"pitch set has {len(pitch_set)} notes, at least {MIN_NOTES} required"
        )
    try:
        period = Period(period_text.lower())
    except ValueError:
        raise _LineError("BadPrahar", f"period must be 'day' or 'night', got {period_text!r}") from None
    if prahar_text not in {"1", "2", "3", "4"}:
        raise _LineError("BadPrahar", f"prahar must be 1-4, got {prahar_text!r}")

    extras: dict = {}
    for item in fields[4:]:
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip().lower()
        if not sep or key not in {"vadi", "samvadi", "source"}:
            raise _LineError("Malformed", f"unrecognised field {item!r}")
        if key == "source":
            extras["source_note"] = value.strip()
        else:
            extras[key] = _parse_degree(key, value)
    return RagaRecord(name=name, pitch_set=pitch_set, prahar=Prahar(period, int(prahar_text)), **extras)


def parse_corpus(text: str) -> tuple[list[RagaRecord], list[Diagnostic]]:
    """Parse corpus file content into records and per-line diagnostics."""
    records: list[RagaRecord] = []
    diagnostics: list[Diagnostic] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split("|")]
        name = fields[0] or f"<line {lineno}>"
        try:
            record = _parse_line(fields)
        except _LineError as exc:
            diagnostics.append(Diagnostic(Severity.ERROR, name, f"{exc.kind}: {exc}", lineno))
            continue
        folded = record.name.casefold()
        if folded in seen:
            diagnostics.append(
                Diagnostic(
                    Severity.ERROR,
                    record.name,
                    f"DuplicateName: already defined on line {seen[folded]}",
                    lineno,
                )
            )
            continue
        seen[folded] = lineno
        records.append(record)
        diagnostics.extend(
            Diagnostic(d.severity, d.record_name, d.message, lineno) for d in validate_record(record)
        )
    return records, diagnostics


def validate_record(record: RagaRecord) -> list[Diagnostic]:
    """Advisory checks: ragas usually include Sa, Ma and Pa."""
    pcs = record.pitch_set
    out = []
    if 0 not in pcs:
        out.append(Diagnostic(Severity.WARNING, record.name, "missing Sa"))
    if 5 not in pcs and 6 not in pcs:
        out.append(Diagnostic(Severity.WARNING, record.name, "missing Ma"))
    if 7 not in pcs:
        out.append(Diagnostic(Severity.WARNING, record.name, "missing Pa"))
    return out


def read_corpus(path=None) -> tuple[list[RagaRecord], list[Diagnostic]]:
    """Read and parse a corpus file; ``None`` reads the shipped dataset."""
    if path is None:
        text = resources.files("raga_tonnetz").joinpath("data").joinpath(DEFAULT_CORPUS).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return parse_corpus(text)


def load_default_corpus() -> list[RagaRecord]:
    records, diagnostics = read_corpus()
    errors = [d for d in diagnostics if d.is_error]
    if errors:
        raise ValueError(f"shipped corpus has {len(errors)} errors: {errors[0]}")
    return records


def find_raga(records, name: str) -> RagaRecord:
    folded = name.strip().casefold()
    for record in records:
        if record.name.casefold() == folded:
            return record
    raise UnknownRaga(name)
