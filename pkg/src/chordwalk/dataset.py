"""Dataset expansion and serialization, plus the counts report.

Every numeric progression of a mode is crossed with all 21 scales of that
mode to form one dataset row per combination. Row order is fixed (scales in
grid order, progressions in enumeration order) so exports are reproducible
byte-for-byte. The counts report puts the row totals computed here next to
the figures published for this enumeration, flagging each match or
mismatch; the published 4-chord counts factor as 21 x numeric, the
published 8-chord counts do not, and the computed counts stand on the
matrix-power oracle either way.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

from .graph import (
    NumericProgression,
    TransitionTable,
    count_by_matrix_power,
    default_table,
    enumerate_progressions,
)
from .scales import Mode, chords_in_scale, diatonic_chord, parse_scale_id, scales_for_mode

SCALES_PER_MODE = 21

CSV_HEADER = ("scale", "number_progression", "scale_progression", "mode")

# Published figures this enumeration is cross-checked against.
PUBLISHED_ROW_COUNTS = {
    (4, "major"): 1533,
    (4, "minor"): 1764,
    (4, "total"): 3297,
    (8, "major"): 182094,
    (8, "minor"): 223122,
    (8, "total"): 405216,
}
PUBLISHED_NUMERIC_COUNTS = {
    (4, "major"): 73,
    (4, "minor"): 84,
    (4, "total"): 157,
}


@dataclass(frozen=True)
class DatasetRow:
    """One scale crossed with one numeric progression, rendered to symbols."""

    scale_id: str
    number_progression: tuple[str, ...]
    scale_progression: tuple[str, ...]
    mode: str


def _tables_by_mode(tables: Sequence[TransitionTable] | None) -> dict[Mode, TransitionTable]:
    if tables is None:
        return {mode: default_table(mode) for mode in Mode}
    return {table.mode: table for table in tables}


def render_row(
    scale_id: str,
    progression: NumericProgression,
    *,
    raised_leading_tone: bool = False,
) -> DatasetRow:
    """Build the dataset row for one (scale, progression) pair."""
    scale = parse_scale_id(scale_id)
    symbols = tuple(
        diatonic_chord(scale, token, raised_leading_tone=raised_leading_tone).symbol
        for token in progression.tokens
    )
    return DatasetRow(scale.id, progression.token_texts, symbols, scale.mode.value)


def dataset_rows(
    length: int,
    modes: Sequence[Mode] = (Mode.MAJOR, Mode.MINOR),
    tables: Sequence[TransitionTable] | None = None,
    *,
    raised_leading_tone: bool = False,
) -> Iterator[DatasetRow]:
    """Stream all rows for the requested modes at the given length.

    Rows come out scale-major: all progressions of the first scale, then the
    next scale, majors before minors. The stream never materializes the full
    row set, only one mode's numeric progressions at a time.
    """
    by_mode = _tables_by_mode(tables)
    for mode in (Mode.MAJOR, Mode.MINOR):
        if mode not in modes:
            continue
        progressions = enumerate_progressions(by_mode[mode], length)
        for scale in scales_for_mode(mode):
            chord_by_token = {
                chord.token: chord.symbol
                for chord in chords_in_scale(scale, raised_leading_tone=raised_leading_tone)
            }
            for progression in progressions:
                symbols = tuple(chord_by_token[token] for token in progression.tokens)
                yield DatasetRow(scale.id, progression.token_texts, symbols, mode.value)


def write_csv(rows: Iterable[DatasetRow], sink: IO[str]) -> int:
    """Write rows as CSV (RFC 4180 quoting, LF newlines); returns the row count.

    Multi-token fields are single quoted cells of comma-joined tokens, e.g.
    C-major,"1,1,1,1","C,C,C,C",major
    """
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for row in rows:
        writer.writerow(
            (row.scale_id, ",".join(row.number_progression), ",".join(row.scale_progression), row.mode)
        )
        count += 1
    return count


def parse_csv(source: IO[str]) -> Iterator[DatasetRow]:
    """Read rows back from write_csv output."""
    reader = csv.reader(source)
    header = next(reader, None)
    if header is not None and tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    for record in reader:
        if not record:
            continue
        scale_id, numbers, symbols, mode = record
        yield DatasetRow(scale_id, tuple(numbers.split(",")), tuple(symbols.split(",")), mode)


def write_jsonl(rows: Iterable[DatasetRow], sink: IO[str]) -> int:
    """Write rows as JSON Lines (one object per row); returns the row count."""
    count = 0
    for row in rows:
        json.dump(
            {
                "scale": row.scale_id,
                "number_progression": list(row.number_progression),
                "scale_progression": list(row.scale_progression),
                "mode": row.mode,
            },
            sink,
            separators=(",", ":"),
        )
        sink.write("\n")
        count += 1
    return count


def parse_jsonl(source: IO[str]) -> Iterator[DatasetRow]:
    """Read rows back from write_jsonl output."""
    for line in source:
        if not line.strip():
            continue
        record = json.loads(line)
        yield DatasetRow(
            record["scale"],
            tuple(record["number_progression"]),
            tuple(record["scale_progression"]),
            record["mode"],
        )


@dataclass(frozen=True)
class CountsCell:
    """Computed vs published counts for one (length, mode) combination."""

    length: int
    mode: str  # "major", "minor", or "total"
    computed_numeric: int
    computed_rows: int
    published_numeric: int | None
    published_rows: int | None

    @property
    def numeric_match(self) -> bool | None:
        if self.published_numeric is None:
            return None
        return self.computed_numeric == self.published_numeric

    @property
    def rows_match(self) -> bool | None:
        if self.published_rows is None:
            return None
        return self.computed_rows == self.published_rows


def counts_report(
    lengths: Sequence[int],
    tables: Sequence[TransitionTable] | None = None,
) -> list[CountsCell]:
    """Counts per (length, mode) plus a total line per length."""
    by_mode = _tables_by_mode(tables)
    cells = []
    for length in lengths:
        numeric = {mode: count_by_matrix_power(by_mode[mode], length) for mode in Mode}
        per_mode = {mode.value: numeric[mode] for mode in Mode}
        per_mode["total"] = sum(numeric.values())
        for name in ("major", "minor", "total"):
            cells.append(
                CountsCell(
                    length=length,
                    mode=name,
                    computed_numeric=per_mode[name],
                    computed_rows=SCALES_PER_MODE * per_mode[name],
                    published_numeric=PUBLISHED_NUMERIC_COUNTS.get((length, name)),
                    published_rows=PUBLISHED_ROW_COUNTS.get((length, name)),
                )
            )
    return cells


def render_counts(cells: Sequence[CountsCell]) -> str:
    """Fixed-width text table of a counts report."""

    def fmt(value: int | None) -> str:
        return "-" if value is None else f"{value:,}"

    def flag(match: bool | None) -> str:
        if match is None:
            return "-"
        return "MATCH" if match else "MISMATCH"

    header = (
        "length", "mode", "numeric", "numeric(published)", "match",
        "rows", "rows(published)", "match",
    )
    body = [
        (
            str(cell.length),
            cell.mode,
            fmt(cell.computed_numeric),
            fmt(cell.published_numeric),
            flag(cell.numeric_match),
            fmt(cell.computed_rows),
            fmt(cell.published_rows),
            flag(cell.rows_match),
        )
        for cell in cells
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = [
        "Computed vs published progression counts "
        f"(rows = {SCALES_PER_MODE} scales x numeric progressions)"
    ]
    for line in [header, *body]:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    return "\n".join(lines)
