"""Print computed progression counts next to the published totals.

Also reruns the comparison with the stricter no-tonic-repeat tables from
data/transition_tables/ to show how far that variant lands from both.
"""

import sys
from pathlib import Path

from chordwalk.dataset import counts_report, render_counts
from chordwalk.graph import read_transition_table

TABLE_DIR = Path(__file__).resolve().parent.parent / "data" / "transition_tables"


def main() -> int:
    print("Default tables (tonic self-loop included)")
    print(render_counts(counts_report([4, 8])))
    print()
    strict = [
        read_transition_table(TABLE_DIR / "major-no-tonic-repeat.json"),
        read_transition_table(TABLE_DIR / "minor-no-tonic-repeat.json"),
    ]
    print("No-tonic-repeat tables")
    print(render_counts(counts_report([4, 8], tables=strict)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
