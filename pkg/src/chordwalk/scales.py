"""Scale construction and diatonic triads.

Covers the two modes in play (Ionian major and Aeolian natural minor) over
the full 21-tonic spelling grid per mode: each of the seven letters as
natural, sharp, and flat. Enharmonic pairs such as Cb major and B major are
distinct scales on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidDegreeTokenError, UnspellableNoteError
from .pitch import (
    BASE_SEMITONE,
    Interval,
    SpelledPitchClass,
    letter_at,
    spell_on_letter,
    transpose,
)

SUBTONIC_MAJOR_TOKEN = 8
SUBTONIC_MAJOR_TEXT = "7Maj"


class Mode(Enum):
    MAJOR = "major"
    MINOR = "minor"

    @property
    def steps(self) -> tuple[int, ...]:
        """Half-step gaps between consecutive scale degrees (closing the octave)."""
        return _MODE_STEPS[self]

    @property
    def degree_tokens(self) -> tuple[int, ...]:
        """Progression tokens defined for this mode, in degree order.

        Minor has two distinct degree-7 tokens: 7 is the diminished chord,
        8 (displayed "7Maj") the major triad on the subtonic.
        """
        if self is Mode.MINOR:
            return (1, 2, 3, 4, 5, 6, 7, SUBTONIC_MAJOR_TOKEN)
        return (1, 2, 3, 4, 5, 6, 7)


_MODE_STEPS = {
    Mode.MAJOR: (2, 2, 1, 2, 2, 2, 1),
    Mode.MINOR: (2, 1, 2, 2, 1, 2, 2),
}


class ChordQuality(Enum):
    """Triad quality, defined by the two stacked third intervals."""

    MAJOR = (Interval.MAJOR_THIRD, Interval.MINOR_THIRD)
    MINOR = (Interval.MINOR_THIRD, Interval.MAJOR_THIRD)
    DIMINISHED = (Interval.MINOR_THIRD, Interval.MINOR_THIRD)

    @property
    def thirds(self) -> tuple[Interval, Interval]:
        return self.value

    @property
    def suffix(self) -> str:
        return _QUALITY_SUFFIX[self]


_QUALITY_SUFFIX = {
    ChordQuality.MAJOR: "",
    ChordQuality.MINOR: "m",
    ChordQuality.DIMINISHED: "dim",
}

def quality_from_intervals(first: int, second: int) -> ChordQuality:
    """Classify a triad by its stacked interval pattern in half steps."""
    for quality in ChordQuality:
        if (quality.thirds[0].half_steps, quality.thirds[1].half_steps) == (first, second):
            return quality
    raise ValueError(f"interval stack ({first}, {second}) is not a major/minor/diminished triad")


@dataclass(frozen=True)
class Scale:
    """A tonic, a mode, and the seven spelled degree notes."""

    tonic: SpelledPitchClass
    mode: Mode
    degrees: tuple[SpelledPitchClass, ...]

    @property
    def id(self) -> str:
        """Identifier used in files and APIs, e.g. "C#-major" or "A-minor"."""
        return f"{self.tonic}-{self.mode.value}"

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True)
class DiatonicChord:
    """A triad assigned to a degree token of some scale."""

    token: int
    root: SpelledPitchClass
    quality: ChordQuality
    notes: tuple[SpelledPitchClass, SpelledPitchClass, SpelledPitchClass]

    @property
    def symbol(self) -> str:
        """Chord symbol: bare root for major, "m" for minor, "dim" for diminished."""
        return f"{self.root}{self.quality.suffix}"


def build_scale(tonic: SpelledPitchClass, mode: Mode) -> Scale:
    """Build the scale on a tonic by walking the mode's interval pattern.

    Each degree is forced onto the next letter of the cyclic sequence, so
    theoretical tonics (G# major, say) come out with the double accidentals
    they actually need. Raises UnspellableNoteError if a degree would need
    more than a double accidental.
    """
    degrees = [tonic]
    half_steps = 0
    for position, step in enumerate(mode.steps[:-1], start=1):
        half_steps += step
        degrees.append(transpose(tonic, half_steps, letter_at(tonic.letter, position)))
    return Scale(tonic, mode, tuple(degrees))


# Tonic grid per mode: each letter as natural, sharp, flat, in letter order.
TONIC_ACCIDENTALS = (0, 1, -1)


def tonic_grid() -> tuple[SpelledPitchClass, ...]:
    """The 21 tonic spellings, in the fixed file/report order (C, C#, Cb, D, ...)."""
    return tuple(
        SpelledPitchClass(letter, accidental)
        for letter in ("C", "D", "E", "F", "G", "A", "B")
        for accidental in TONIC_ACCIDENTALS
    )


def scales_for_mode(mode: Mode) -> tuple[Scale, ...]:
    """All 21 scales of one mode, in tonic-grid order."""
    return tuple(build_scale(tonic, mode) for tonic in tonic_grid())


def enumerate_scales() -> tuple[Scale, ...]:
    """All 42 scales: the 21 majors, then the 21 minors."""
    return scales_for_mode(Mode.MAJOR) + scales_for_mode(Mode.MINOR)


def parse_scale_id(text: str) -> Scale:
    """Parse an identifier like "C#-major" into a scale.

    Only the canonical 21 tonics per mode are accepted (single accidentals);
    scales on double-accidental tonics can be built directly via build_scale
    but have no identifier in the canonical set.
    """
    spelling_text, sep, mode_text = text.partition("-")
    if not sep or mode_text not in (Mode.MAJOR.value, Mode.MINOR.value):
        raise ValueError(f"bad scale id {text!r}: expected '<spelling>-major' or '<spelling>-minor'")
    tonic = SpelledPitchClass.parse(spelling_text)
    if tonic.accidental not in TONIC_ACCIDENTALS:
        raise ValueError(f"unknown scale {text!r}: tonics use at most one sharp or flat")
    return build_scale(tonic, Mode(mode_text))


def _stacked_triad(scale: Scale, degree_index: int) -> tuple[SpelledPitchClass, ...]:
    """Notes at degrees d, d+2, d+4 (0-based index, wrapping)."""
    return (
        scale.degrees[degree_index],
        scale.degrees[(degree_index + 2) % 7],
        scale.degrees[(degree_index + 4) % 7],
    )


def _nearest_spelling(pitch_class: int, letter: str) -> SpelledPitchClass:
    """Spell a pitch class on a letter, nudging to a neighbor when out of reach."""
    for _ in range(7):
        try:
            return spell_on_letter(pitch_class, letter)
        except UnspellableNoteError:
            delta = (pitch_class - BASE_SEMITONE[letter]) % 12
            letter = letter_at(letter, 1 if delta <= 6 else -1)
    raise UnspellableNoteError(f"pitch class {pitch_class} has no spelling")


def _triad_on_root(root: SpelledPitchClass, quality: ChordQuality) -> tuple[SpelledPitchClass, ...]:
    """Stack a triad of the given quality on a root.

    Members land on the stacked-third letters (root, +2, +4) whenever those
    letters can carry the needed accidental. One canonical chord cannot: the
    rooted diminished chord of Fb minor, whose fifth would be a triple-flat
    B; such members respell enharmonically on the neighboring letter.
    """
    first, second = quality.thirds
    third = _nearest_spelling((root.pitch_class + first.half_steps) % 12, letter_at(root.letter, 2))
    fifth = _nearest_spelling((third.pitch_class + second.half_steps) % 12, letter_at(root.letter, 4))
    return (root, third, fifth)


def _classify(notes: tuple[SpelledPitchClass, ...]) -> ChordQuality:
    first = (notes[1].pitch_class - notes[0].pitch_class) % 12
    second = (notes[2].pitch_class - notes[1].pitch_class) % 12
    return quality_from_intervals(first, second)


def diatonic_chord(scale: Scale, token: int, *, raised_leading_tone: bool = False) -> DiatonicChord:
    """The chord a degree token names within a scale.

    Tokens 1..7 stack thirds from the scale degrees, except minor token 7:
    that one is the diminished triad rooted on the scale's seventh note
    (minor third plus minor third), which pulls in notes from outside the
    scale. With raised_leading_tone=True the root of that chord is raised a
    half step instead, giving the leading-tone diminished triad. Minor token
    8 ("7Maj") is the plain stacked triad on degree 7, which in natural
    minor is always major.
    """
    if token not in scale.mode.degree_tokens:
        raise InvalidDegreeTokenError(
            f"token {token} is not defined for {scale.mode.value} scales "
            f"(valid: {scale.mode.degree_tokens})"
        )
    if scale.mode is Mode.MINOR and token == 7:
        root = scale.degrees[6]
        if raised_leading_tone:
            root = transpose(root, 1, root.letter)
        notes = _triad_on_root(root, ChordQuality.DIMINISHED)
        return DiatonicChord(token, root, ChordQuality.DIMINISHED, notes)
    degree_index = 6 if token == SUBTONIC_MAJOR_TOKEN else token - 1
    notes = _stacked_triad(scale, degree_index)
    return DiatonicChord(token, notes[0], _classify(notes), notes)


def chords_in_scale(scale: Scale, *, raised_leading_tone: bool = False) -> tuple[DiatonicChord, ...]:
    """One chord per degree token of the mode, in token order (7 major, 8 minor)."""
    return tuple(
        diatonic_chord(scale, token, raised_leading_tone=raised_leading_tone)
        for token in scale.mode.degree_tokens
    )


def subtonic_major_chord(scale: Scale) -> DiatonicChord:
    """The major triad rooted on a scale's seventh note.

    This is what minor token 8 means; building it from explicit intervals
    also lets major scales render that token when a minor progression is
    replayed on one of its major variation scales.
    """
    root = scale.degrees[6]
    notes = _triad_on_root(root, ChordQuality.MAJOR)
    return DiatonicChord(SUBTONIC_MAJOR_TOKEN, root, ChordQuality.MAJOR, notes)
