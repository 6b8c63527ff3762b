"""Corpus-level analysis: per-raga rows, count tables and the vadi time rule."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .classify import Heaviness, HeavinessCounts, heaviness_counts
from .corpus import ALL_PRAHARS, Period, Prahar, RagaRecord
from .embed import DEFAULT_WINDOW, EmbeddingResult, SearchWindow, solve_embedding
from .swara import SwaraDegree, format_pitch_set

# Published counts (top, bottom, neutral); blank cells read as zero.
PUBLISHED_DAY_NIGHT = {Period.DAY: (15, 13, 2), Period.NIGHT: (21, 14, 0)}
PUBLISHED_BY_PRAHAR = {
    Prahar(Period.DAY, 1): (6, 2, 0),
    Prahar(Period.DAY, 2): (3, 7, 1),
    Prahar(Period.DAY, 3): (4, 4, 0),
    Prahar(Period.DAY, 4): (2, 0, 1),
    Prahar(Period.NIGHT, 1): (6, 0, 0),
    Prahar(Period.NIGHT, 2): (11, 7, 0),
    Prahar(Period.NIGHT, 3): (2, 6, 0),
    Prahar(Period.NIGHT, 4): (2, 1, 0),
}
# The only per-raga labels stated outright.
PUBLISHED_ANCHORS = {
    "Bhairav": Heaviness.TOP_HEAVY,
    "Multani": Heaviness.BOTTOM_HEAVY,
    "Charukeshi": Heaviness.NEUTRAL,
    "Purvi": Heaviness.NEUTRAL,
}

DUSK_RANGE = frozenset({Prahar(Period.DAY, 4), Prahar(Period.NIGHT, 1)})  # 3pm-9pm
DAWN_RANGE = frozenset({Prahar(Period.NIGHT, 4), Prahar(Period.DAY, 1)})  # 3am-9am

_LABEL_ORDER = (Heaviness.TOP_HEAVY, Heaviness.BOTTOM_HEAVY, Heaviness.NEUTRAL)


@dataclass(frozen=True)
class AnalysisRow:
    raga: RagaRecord
    result: EmbeddingResult
    heaviness: Heaviness
    counts: HeavinessCounts

    @property
    def ambiguous(self) -> bool:
        return self.result.ambiguous_heaviness


@dataclass(frozen=True)
class TableRow:
    label: str
    top: int
    bottom: int
    neutral: int

    @property
    def total(self) -> int:
        return self.top + self.bottom + self.neutral

    def as_tuple(self) -> tuple[int, int, int]:
        return self.top, self.bottom, self.neutral


@dataclass(frozen=True)
class AggregateTable:
    title: str
    rows: tuple[TableRow, ...]

    def __getitem__(self, label: str) -> TableRow:
        for row in self.rows:
            if row.label == label:
                return row
        raise KeyError(label)


class TimeHalf(Enum):
    NOON_TO_MIDNIGHT = "NoonToMidnight"
    MIDNIGHT_TO_NOON = "MidnightToNoon"
    AMBIGUOUS = "Ambiguous"

    def __str__(self) -> str:
        return self.value


def analyze_record(record: RagaRecord, window: SearchWindow = DEFAULT_WINDOW) -> AnalysisRow:
    result = solve_embedding(record.pitch_set, window)
    return AnalysisRow(
        raga=record,
        result=result,
        heaviness=result.heaviness,
        counts=heaviness_counts(result.canonical),
    )


def analyze_corpus(records: Iterable[RagaRecord], window: SearchWindow = DEFAULT_WINDOW) -> list[AnalysisRow]:
    return [analyze_record(r, window) for r in records]


def _count(rows: Iterable[AnalysisRow]) -> tuple[int, int, int]:
    labels = [row.heaviness for row in rows]
    return tuple(labels.count(h) for h in _LABEL_ORDER)  # type: ignore[return-value]


def table_day_night(rows: Sequence[AnalysisRow]) -> AggregateTable:
    return AggregateTable(
        "Time",
        tuple(
            TableRow(str(period), *_count(r for r in rows if r.raga.period is period))
            for period in Period
        ),
    )


def table_by_prahar(rows: Sequence[AnalysisRow], period: Period) -> AggregateTable:
    return AggregateTable(
        f"Prahar of {period}",
        tuple(
            TableRow(Prahar(period, i).label, *_count(r for r in rows if r.raga.prahar == Prahar(period, i)))
            for i in range(1, 5)
        ),
    )


def aggregate_range(rows: Sequence[AnalysisRow], prahars: Iterable[Prahar]) -> tuple[int, int, int]:
    prahars = set(prahars)
    if not prahars:
        raise ValueError("at least one prahar is required")
    return _count(r for r in rows if r.raga.prahar in prahars)


def vadi_time_half(vadi: SwaraDegree) -> TimeHalf:
    """Performance half-day implied by the vadi.

    Purvanga (Sa Re Ga Ma) means noon to midnight and uttaranga (Ma Pa Dha
    Ni) midnight to noon. Ma belongs to both tetrachords.
    """
    if vadi is SwaraDegree.MA:
        return TimeHalf.AMBIGUOUS
    if vadi in (SwaraDegree.SA, SwaraDegree.RE, SwaraDegree.GA):
        return TimeHalf.NOON_TO_MIDNIGHT
    return TimeHalf.MIDNIGHT_TO_NOON


def range_table(rows: Sequence[AnalysisRow]) -> AggregateTable:
    return AggregateTable(
        "Range",
        (
            TableRow("3pm-9pm", *aggregate_range(rows, DUSK_RANGE)),
            TableRow("3am-9am", *aggregate_range(rows, DAWN_RANGE)),
        ),
    )


def all_tables(rows: Sequence[AnalysisRow]) -> list[AggregateTable]:
    return [
        table_day_night(rows),
        table_by_prahar(rows, Period.DAY),
        table_by_prahar(rows, Period.NIGHT),
        range_table(rows),
    ]


# -- formatting ---------------------------------------------------------------

_HEADER = ("Top-Heavy", "Bottom-Heavy", "Neutral")


def format_table_text(table: AggregateTable) -> str:
    header = (table.title, *_HEADER)
    body = [(r.label, str(r.top), str(r.bottom), str(r.neutral)) for r in table.rows]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(4)]

    def fmt(cells):
        first = cells[0].ljust(widths[0])
        rest = "  ".join(c.rjust(w) for c, w in zip(cells[1:], widths[1:]))
        return f"{first}  {rest}".rstrip()

    rule = "-" * (sum(widths) + 2 * 3)
    return "\n".join([fmt(header), rule, *(fmt(b) for b in body)]) + "\n"


def format_table_tsv(table: AggregateTable) -> str:
    lines = [f"# {table.title}"]
    lines += [f"{r.label}\t{r.top}\t{r.bottom}\t{r.neutral}" for r in table.rows]
    return "\n".join(lines) + "\n"


def parse_tables_tsv(text: str) -> list[AggregateTable]:
    """Inverse of :func:`format_table_tsv` over a concatenation of tables."""
    tables: list[AggregateTable] = []
    title = None
    rows: list[TableRow] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("# "):
            if title is not None:
                tables.append(AggregateTable(title, tuple(rows)))
            title, rows = line[2:], []
            continue
        label, top, bottom, neutral = line.split("\t")
        rows.append(TableRow(label, int(top), int(bottom), int(neutral)))
    if title is not None:
        tables.append(AggregateTable(title, tuple(rows)))
    return tables


def format_analysis_row(row: AnalysisRow, tsv: bool = False) -> str:
    c = row.counts
    cells = [
        row.raga.name,
        format_pitch_set(row.raga.pitch_set),
        str(row.result.edge_count),
        str(c.above),
        str(c.below),
        str(c.on_axis),
        str(row.heaviness),
        "ambiguous" if row.ambiguous else "-",
    ]
    if tsv:
        return "\t".join(cells)
    return f"{cells[0]:<28} {cells[1]:<22} {cells[2]:>5} {cells[3]:>5} {cells[4]:>5} {cells[5]:>5}  {cells[6]:<11}  {cells[7]}"


ANALYSIS_HEADER = ("raga", "pitch set", "edges", "above", "below", "axis", "heaviness", "optima")


def format_analysis_header(tsv: bool = False) -> str:
    h = ANALYSIS_HEADER
    if tsv:
        return "\t".join(h)
    return f"{h[0]:<28} {h[1]:<22} {h[2]:>5} {h[3]:>5} {h[4]:>5} {h[5]:>5}  {h[6]:<11}  {h[7]}"


# -- comparison with published counts ----------------------------------------


def deviating_rows(rows: Sequence[AnalysisRow]) -> list[tuple[AnalysisRow, str]]:
    """Rows that explain every difference from the published prahar counts.

    For each prahar in which a label is over-represented relative to the
    published count, every raga of that prahar carrying the label is listed
    (which of them is "the" deviating one cannot be known). Anchor ragas with
    a stated label are listed when they disagree with it.
    """
    out: list[tuple[AnalysisRow, str]] = []
    for prahar in ALL_PRAHARS:
        group = [r for r in rows if r.raga.prahar == prahar]
        produced = _count(group)
        published = PUBLISHED_BY_PRAHAR[prahar]
        for label, have, want in zip(_LABEL_ORDER, produced, published):
            if have > want:
                for r in group:
                    if r.heaviness is label:
                        out.append((r, f"{prahar}: {have} {label} vs {want} published"))
    for r in rows:
        expected = PUBLISHED_ANCHORS.get(r.raga.name)
        if expected is not None and r.heaviness is not expected:
            out.append((r, f"stated label {expected}, produced {r.heaviness}"))
    return out


def discrepancy_report(rows: Sequence[AnalysisRow]) -> str:
    lines = []
    produced = table_day_night(rows)
    for period in Period:
        have = produced[str(period)].as_tuple()
        want = PUBLISHED_DAY_NIGHT[period]
        delta = tuple(h - w for h, w in zip(have, want))
        lines.append(f"{period}: produced {have}, published {want}, difference {delta}")
    lines.append("")
    entries = deviating_rows(rows)
    if not entries:
        lines.append("no deviating ragas")
    for row, reason in entries:
        lines.append(f"{row.raga.name} [{reason}]")
        lines.append(f"    pitch set: {format_pitch_set(row.raga.pitch_set)}")
        lines.append(f"    source: {row.raga.source_note or '(none)'}")
    ambiguous = sum(r.ambiguous for r in rows)
    lines.append("")
    lines.append(f"{ambiguous} of {len(rows)} ragas have optima that disagree on heaviness")
    return "\n".join(lines) + "\n"
