"""Spelled pitch classes, octave-bearing pitches, and MIDI conversion.

Spelling (letter plus accidental) is kept distinct from sounding pitch:
Cb and B name the same pitch class but are different spellings, and both
must survive round trips through text, CSV, and the HTTP API. Accidentals
range from double-flat (-2) to double-sharp (+2), which is exactly enough
to spell every scale this package constructs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum

from .errors import MidiRangeError, UnspellableNoteError

LETTERS = ("C", "D", "E", "F", "G", "A", "B")

BASE_SEMITONE = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}

MIN_ACCIDENTAL = -2
MAX_ACCIDENTAL = 2

ACCIDENTAL_TEXT = {-2: "bb", -1: "b", 0: "", 1: "#", 2: "##"}
_TEXT_ACCIDENTAL = {text: value for value, text in ACCIDENTAL_TEXT.items()}

_SPELLING_RE = re.compile(r"^([A-G])(bb|b|##|#)?$")


class Interval(IntEnum):
    """The six interval sizes used for scale steps and triad stacking."""

    HALF_STEP = 1
    WHOLE_STEP = 2
    MINOR_THIRD = 3
    MAJOR_THIRD = 4
    DIMINISHED_FIFTH = 6
    PERFECT_FIFTH = 7

    @property
    def half_steps(self) -> int:
        return int(self)


@dataclass(frozen=True)
class SpelledPitchClass:
    """A letter name plus an accidental offset in half steps, e.g. F## or Bb."""

    letter: str
    accidental: int = 0

    def __post_init__(self) -> None:
        if self.letter not in BASE_SEMITONE:
            raise ValueError(f"unknown letter {self.letter!r}; expected one of {LETTERS}")
        if not MIN_ACCIDENTAL <= self.accidental <= MAX_ACCIDENTAL:
            raise UnspellableNoteError(
                f"accidental {self.accidental:+d} on {self.letter} exceeds double sharps/flats"
            )

    @property
    def pitch_class(self) -> int:
        """Sounding pitch class 0..11; enharmonic spellings share a value."""
        return (BASE_SEMITONE[self.letter] + self.accidental) % 12

    def is_enharmonic(self, other: "SpelledPitchClass") -> bool:
        return self.pitch_class == other.pitch_class

    def __str__(self) -> str:
        return self.letter + ACCIDENTAL_TEXT[self.accidental]

    @classmethod
    def parse(cls, text: str) -> "SpelledPitchClass":
        """Parse text like "C", "F#", "Bbb" (uppercase letter, then #/##/b/bb)."""
        match = _SPELLING_RE.match(text)
        if match is None:
            raise ValueError(
                f"bad spelling {text!r}: expected a letter A-G followed by one of #, ##, b, bb"
            )
        letter, accidental = match.groups()
        return cls(letter, _TEXT_ACCIDENTAL[accidental or ""])


@dataclass(frozen=True)
class Pitch:
    """A spelled pitch class in a concrete octave (scientific pitch notation).

    The octave number binds to the letter, so Cb4 sounds one half step below
    C4 and B#3 sounds the same as C4.
    """

    spelled: SpelledPitchClass
    octave: int

    def __post_init__(self) -> None:
        if not -1 <= self.octave <= 9:
            raise ValueError(f"octave {self.octave} outside scientific range -1..9")

    def to_midi(self) -> int:
        """MIDI note number, C4 = 60. Raises MidiRangeError outside 0..127."""
        midi = 12 * (self.octave + 1) + BASE_SEMITONE[self.spelled.letter] + self.spelled.accidental
        if not 0 <= midi <= 127:
            raise MidiRangeError(f"{self} maps to MIDI {midi}, outside 0..127")
        return midi

    def __str__(self) -> str:
        return f"{self.spelled}{self.octave}"


def letter_index(letter: str) -> int:
    """Position of a letter in the C..B cycle (C=0 .. B=6)."""
    return LETTERS.index(letter)


def letter_at(letter: str, offset: int) -> str:
    """The letter `offset` positions up the cyclic letter sequence."""
    return LETTERS[(letter_index(letter) + offset) % 7]


def spell_on_letter(pitch_class: int, letter: str) -> SpelledPitchClass:
    """Spell a pitch class (0..11) on a given letter, if a legal accidental exists.

    Raises UnspellableNoteError when the letter would need more than a
    double sharp or double flat to sound that pitch class.
    """
    if letter not in BASE_SEMITONE:
        raise ValueError(f"unknown letter {letter!r}")
    delta = (pitch_class % 12 - BASE_SEMITONE[letter]) % 12
    if delta > 6:
        delta -= 12
    if not MIN_ACCIDENTAL <= delta <= MAX_ACCIDENTAL:
        raise UnspellableNoteError(
            f"no spelling of pitch class {pitch_class % 12} on letter {letter} "
            f"within double sharps/flats (would need {delta:+d})"
        )
    return SpelledPitchClass(letter, delta)


def transpose(spelled: SpelledPitchClass, half_steps: int, target_letter: str) -> SpelledPitchClass:
    """Move a spelling by `half_steps` and land it on a prescribed letter.

    The accidental is whatever the target letter needs to sound the shifted
    pitch class; if that would exceed a double sharp or double flat the note
    is unspellable and UnspellableNoteError is raised.
    """
    return spell_on_letter(spelled.pitch_class + half_steps, target_letter)
