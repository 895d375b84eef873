"""Regenerate the 4-chord and (optionally) 8-chord datasets under data/exports/.

Usage:
    python scripts/export_datasets.py [--eight-chord] [--format csv|jsonl]
"""

import argparse
import sys
import time
from pathlib import Path

from chordwalk.dataset import dataset_rows, write_csv, write_jsonl
from chordwalk.scales import Mode

EXPORT_DIR = Path(__file__).resolve().parent.parent / "data" / "exports"


def export(length: int, fmt: str) -> None:
    EXPORT_DIR.mkdir(parents=True, exist_ok=True)
    path = EXPORT_DIR / f"progressions-{length}-chord.{fmt}"
    started = time.perf_counter()
    rows = dataset_rows(length, (Mode.MAJOR, Mode.MINOR))
    with open(path, "w", encoding="utf-8", newline="") as fp:
        count = write_jsonl(rows, fp) if fmt == "jsonl" else write_csv(rows, fp)
    elapsed = time.perf_counter() - started
    print(f"{path}: {count:,} rows in {elapsed:.1f}s")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--eight-chord", action="store_true", help="also export length 8")
    parser.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    args = parser.parse_args()
    export(4, args.format)
    if args.eight_chord:
        export(8, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
