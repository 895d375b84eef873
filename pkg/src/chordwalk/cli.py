"""Command-line interface: enumeration, datasets, counts, variations, MIDI, serving."""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import nullcontext
from typing import Sequence, TextIO

from . import dataset as dataset_io
from .errors import ChordwalkError
from .graph import (
    TransitionTable,
    default_table,
    enumerate_progressions,
    explain_invalid,
    parse_progression,
    read_transition_table,
)
from .midi import PlaybackConfig, get_music_notes, to_timed_events, write_smf
from .scales import Mode, parse_scale_id
from .variations import alternates, realize_progression

PORT_ENV_VAR = "CHORDWALK_PORT"


def _modes(text: str) -> list[Mode]:
    if text == "both":
        return [Mode.MAJOR, Mode.MINOR]
    return [Mode(text)]


def _tables(paths: Sequence[str] | None) -> dict[Mode, TransitionTable]:
    """Default tables, overridden per mode by any user-supplied documents."""
    tables = {mode: default_table(mode) for mode in Mode}
    for path in paths or ():
        table = read_transition_table(path)
        tables[table.mode] = table
    return tables


def _open_out(path: str | None) -> TextIO | nullcontext:
    if path is None or path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8", newline="")


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.length < 2:
        raise ValueError(f"length must be >= 2, got {args.length}")
    tables = _tables(args.table)
    total = 0
    with _open_out(args.output) as out:
        for mode in _modes(args.mode):
            for progression in enumerate_progressions(tables[mode], args.length):
                if args.format == "jsonl":
                    out.write(json.dumps(list(progression.token_texts)) + "\n")
                else:
                    out.write(str(progression) + "\n")
                total += 1
    print(f"Total Possibilities: {total}")
    return 0


def cmd_dataset(args: argparse.Namespace) -> int:
    if args.length < 2:
        raise ValueError(f"length must be >= 2, got {args.length}")
    tables = _tables(args.table)
    rows = dataset_io.dataset_rows(
        args.length, _modes(args.mode), tables=list(tables.values())
    )
    with _open_out(args.out) as out:
        if args.format == "jsonl":
            count = dataset_io.write_jsonl(rows, out)
        else:
            count = dataset_io.write_csv(rows, out)
    print(f"Rows written: {count}")
    return 0


def cmd_counts(args: argparse.Namespace) -> int:
    lengths = args.length or [4, 8]
    tables = _tables(args.table)
    report = dataset_io.counts_report(lengths, tables=list(tables.values()))
    print(dataset_io.render_counts(report))
    return 0


def cmd_alternates(args: argparse.Namespace) -> int:
    scale = parse_scale_id(args.scale)
    progression = parse_progression(args.progression, scale.mode)
    reason = explain_invalid(progression, default_table(scale.mode))
    if reason is not None:
        raise ValueError(f"invalid progression: {reason}")
    for alt_scale, alt_progression in alternates(scale, progression).alternates:
        symbols = ",".join(
            chord.symbol for chord in realize_progression(alt_scale, alt_progression.tokens)
        )
        print(f"{alt_scale.id}: {symbols}")
    return 0


def cmd_export_midi(args: argparse.Namespace) -> int:
    scale = parse_scale_id(args.scale)
    progression = parse_progression(args.progression, scale.mode)
    reason = explain_invalid(progression, default_table(scale.mode))
    if reason is not None:
        raise ValueError(f"invalid progression: {reason}")
    config = PlaybackConfig(tempo_bpm=args.tempo, octave=args.octave)
    chords = realize_progression(scale, progression.tokens)
    placed = get_music_notes(
        [chord.notes for chord in chords], config, literal_octave=args.literal_octave
    )
    events = to_timed_events(placed, config)
    with open(args.out, "wb") as sink:
        size = write_smf(events, config, sink)
    print(f"Wrote {size} bytes to {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .api import serve

    serve(args.port, dataset_path=args.dataset, host=args.host)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordwalk",
        description="Enumerate theory-conformant chord progressions and explore them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table_help = "transition-table document (JSON); repeatable, overrides that mode's default"

    p = sub.add_parser("enumerate", help="list all numeric progressions of a length")
    p.add_argument("--mode", choices=["major", "minor", "both"], default="both")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.add_argument("--output", help="file for the progressions (default: stdout)")
    p.add_argument("--table", action="append", help=table_help)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dataset", help="expand progressions across all scales")
    p.add_argument("--mode", choices=["major", "minor", "both"], default="both")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--out", required=True, help="output file ('-' for stdout)")
    p.add_argument("--table", action="append", help=table_help)
    p.set_defaults(func=cmd_dataset)

    p = sub.add_parser("counts", help="computed vs published progression counts")
    p.add_argument("--length", type=int, action="append", help="repeatable; default 4 and 8")
    p.add_argument("--table", action="append", help=table_help)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("alternates", help="the three alternate scales for a selection")
    p.add_argument("--scale", required=True, help="scale id, e.g. C-major")
    p.add_argument("--progression", required=True, help="tokens, e.g. 1,5,6,4")
    p.set_defaults(func=cmd_alternates)

    p = sub.add_parser("export-midi", help="write a progression as a Standard MIDI File")
    p.add_argument("--scale", required=True)
    p.add_argument("--progression", required=True)
    p.add_argument("--tempo", type=int, default=PlaybackConfig().tempo_bpm)
    p.add_argument("--octave", type=int, default=PlaybackConfig().octave)
    p.add_argument("--out", required=True)
    p.add_argument(
        "--literal-octave",
        action="store_true",
        help="stamp the chosen octave on every note instead of ascending placement",
    )
    p.set_defaults(func=cmd_export_midi)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get(PORT_ENV_VAR, "8000")),
        help=f"port to bind (or set {PORT_ENV_VAR})",
    )
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--dataset", help="serve progressions from a pre-generated CSV/JSONL file")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ChordwalkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
