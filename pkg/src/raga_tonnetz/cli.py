"""Command-line entry point: ``raga-tonnetz <command> [options]``."""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .corpus import find_raga, read_corpus
from .embed import SearchWindow
from .exceptions import UnknownRaga, UnknownSwara
from .render import LabelMode, RenderOptions, render_tonnetz_svg
from .report import (
    all_tables,
    analyze_corpus,
    analyze_record,
    discrepancy_report,
    format_analysis_header,
    format_analysis_row,
    format_table_text,
    format_table_tsv,
    vadi_time_half,
)
from .swara import SwaraDegree, format_pitch_set, parse_swara


@dataclass(frozen=True)
class CliConfig:
    corpus_path: Optional[Path] = None
    window: SearchWindow = SearchWindow()
    tabular: bool = False
    output_path: Optional[Path] = None


def _window(text: str) -> SearchWindow:
    try:
        return SearchWindow.square(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Subcommand copies only override the top-level value when given.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--corpus", type=Path, default=default(None),
                        help="corpus file (default: shipped dataset)")
    parser.add_argument("--window", type=_window, default=default(SearchWindow()), metavar="N",
                        help="search |u|,|v| <= N (default 3)")
    parser.add_argument("--format", choices=("text", "tsv"), default=default("text"))
    parser.add_argument("-o", "--output", type=Path, default=default(None),
                        help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)

    parser = argparse.ArgumentParser(
        prog="raga-tonnetz",
        description="Tonnetz embeddings and heaviness analysis of Hindustani ragas.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="per-raga embedding and heaviness")
    p.add_argument("--raga", help="analyse one raga and list all its optima")
    sub.add_parser("tables", parents=[common], help="day/night, prahar and time-range tables")
    p = sub.add_parser("render", parents=[common], help="SVG of a raga's canonical embedding")
    p.add_argument("--raga", required=True)
    p.add_argument("--labels", choices=("swara", "pitch-class"), default="swara")
    sub.add_parser("validate", parents=[common], help="check the corpus file")
    sub.add_parser("discrepancies", parents=[common],
                   help="compare produced counts with the published tables")
    p = sub.add_parser("vadi-time", help="half of the day implied by a vadi swara")
    p.add_argument("token")
    return parser


def _config(args) -> CliConfig:
    return CliConfig(
        corpus_path=args.corpus,
        window=args.window,
        tabular=args.format == "tsv",
        output_path=args.output,
    )


@contextmanager
def _output(path: Optional[Path]):
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        yield fh


def _load(config: CliConfig):
    """Parsed records, or None after reporting errors to stderr."""
    records, diagnostics = read_corpus(config.corpus_path)
    errors = [d for d in diagnostics if d.is_error]
    for d in errors:
        print(d, file=sys.stderr)
    return None if errors else records


def cmd_analyze(config: CliConfig, raga_name: Optional[str] = None) -> int:
    records = _load(config)
    if records is None:
        return 1
    if raga_name is not None:
        try:
            records = [find_raga(records, raga_name)]
        except UnknownRaga as exc:
            print(exc, file=sys.stderr)
            return 1
    rows = analyze_corpus(records, config.window)
    with _output(config.output_path) as out:
        out.write(format_analysis_header(config.tabular) + "\n")
        for row in rows:
            out.write(format_analysis_row(row, config.tabular) + "\n")
        if raga_name is not None:
            result = rows[0].result
            out.write(f"\n{len(result.optima)} optimal embedding(s), {result.edge_count} edges\n")
            for i, emb in enumerate(result.optima):
                marker = "*" if emb == result.canonical else " "
                places = " ".join(f"{format_pitch_set([pc])}({p.u},{p.v})" for pc, p in emb.items)
                out.write(f"{marker} {i + 1}: {places}\n")
    return 0


def cmd_tables(config: CliConfig) -> int:
    records = _load(config)
    if records is None:
        return 1
    rows = analyze_corpus(records, config.window)
    fmt = format_table_tsv if config.tabular else format_table_text
    with _output(config.output_path) as out:
        out.write("\n".join(fmt(t) for t in all_tables(rows)))
        if not config.tabular:
            ambiguous = sum(r.ambiguous for r in rows)
            out.write(f"\n{ambiguous} of {len(rows)} ragas have optima that disagree on heaviness.\n")
    return 0


def cmd_render(config: CliConfig, raga_name: str, out_path: Optional[Path], labels: str = "swara") -> int:
    records = _load(config)
    if records is None:
        return 1
    try:
        record = find_raga(records, raga_name)
    except UnknownRaga as exc:
        print(exc, file=sys.stderr)
        return 1
    row = analyze_record(record, config.window)
    svg = render_tonnetz_svg(
        row.result.canonical,
        RenderOptions(label_mode=LabelMode(labels)),
        title=f"{record.name} ({row.heaviness})",
    )
    try:
        with _output(out_path) as out:
            out.write(svg)
    except OSError as exc:
        print(f"cannot write {out_path}: {exc.strerror}", file=sys.stderr)
        return 1
    return 0


def cmd_validate(config: CliConfig) -> int:
    records, diagnostics = read_corpus(config.corpus_path)
    with _output(config.output_path) as out:
        for d in diagnostics:
            out.write(f"{d}\n")
        n_err = sum(d.is_error for d in diagnostics)
        out.write(f"{len(records)} records, {n_err} errors, {len(diagnostics) - n_err} warnings\n")
    return 1 if n_err else 0


def cmd_discrepancies(config: CliConfig) -> int:
    records = _load(config)
    if records is None:
        return 1
    with _output(config.output_path) as out:
        out.write(discrepancy_report(analyze_corpus(records, config.window)))
    return 0


def cmd_vadi_time(vadi_token: str) -> int:
    try:
        degree = SwaraDegree.of(parse_swara(vadi_token))
    except UnknownSwara as exc:
        print(exc, file=sys.stderr)
        return 1
    print(vadi_time_half(degree))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "vadi-time":
        return cmd_vadi_time(args.token)
    config = _config(args)
    try:
        if args.command == "analyze":
            return cmd_analyze(config, args.raga)
        if args.command == "tables":
            return cmd_tables(config)
        if args.command == "render":
            if args.output is None:
                print("render requires -o PATH", file=sys.stderr)
                return 2
            return cmd_render(config, args.raga, args.output, args.labels)
        if args.command == "validate":
            return cmd_validate(config)
        if args.command == "discrepancies":
            return cmd_discrepancies(config)
    except OSError as exc:
        print(f"{exc.filename}: {exc.strerror}", file=sys.stderr)
        return 1
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
