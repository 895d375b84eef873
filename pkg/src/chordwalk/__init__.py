"""Exhaustive enumeration of theory-conformant chord progressions.

Builds the 21 major and 21 minor scales of the full enharmonic spelling
grid, walks the chord-movement charts to enumerate every progression of a
given length, expands progressions across all scales into datasets, and
exports selections as Standard MIDI Files. An HTTP service and CLI expose
the same operations.
"""

from .errors import (
    ChordwalkError,
    InvalidDegreeTokenError,
    MalformedTableError,
    MidiRangeError,
    UnspellableNoteError,
)
from .graph import (
    DEFAULT_MAJOR_TABLE,
    DEFAULT_MINOR_TABLE,
    NumericProgression,
    TransitionTable,
    count_by_matrix_power,
    default_table,
    enumerate_progressions,
    load_transition_table,
    parse_progression,
    read_transition_table,
    validate,
)
from .pitch import Interval, Pitch, SpelledPitchClass, transpose
from .scales import (
    ChordQuality,
    DiatonicChord,
    Mode,
    Scale,
    build_scale,
    chords_in_scale,
    diatonic_chord,
    enumerate_scales,
    parse_scale_id,
)
from .variations import VariationSet, alternates

__version__ = "0.1.0"

__all__ = [
    "ChordwalkError",
    "ChordQuality",
    "DEFAULT_MAJOR_TABLE",
    "DEFAULT_MINOR_TABLE",
    "DiatonicChord",
    "Interval",
    "InvalidDegreeTokenError",
    "MalformedTableError",
    "MidiRangeError",
    "Mode",
    "NumericProgression",
    "Pitch",
    "Scale",
    "SpelledPitchClass",
    "TransitionTable",
    "UnspellableNoteError",
    "VariationSet",
    "alternates",
    "build_scale",
    "chords_in_scale",
    "count_by_matrix_power",
    "default_table",
    "diatonic_chord",
    "enumerate_progressions",
    "enumerate_scales",
    "load_transition_table",
    "parse_progression",
    "parse_scale_id",
    "read_transition_table",
    "transpose",
    "validate",
]
