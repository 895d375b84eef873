"""Alternate scale variations for a base scale and numeric progression.

A selected progression is replayed, token for token, on three related
scales: for a major base, major scales on degrees 4 and 5 and the minor
scale on degree 6; for a minor base, the major scale on degree 3 and minor
scales on degrees 4 and 5. The alternate tonic reuses the base scale's
degree spelling verbatim, even when that spelling falls outside the
canonical 21-tonic grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import NumericProgression
from .scales import (
    SUBTONIC_MAJOR_TOKEN,
    DiatonicChord,
    Mode,
    Scale,
    build_scale,
    diatonic_chord,
    subtonic_major_chord,
)

# (degree index 0-based, alternate mode) per base mode.
_VARIATION_PLAN = {
    Mode.MAJOR: ((3, Mode.MAJOR), (4, Mode.MAJOR), (5, Mode.MINOR)),
    Mode.MINOR: ((2, Mode.MAJOR), (3, Mode.MINOR), (4, Mode.MINOR)),
}


@dataclass(frozen=True)
class VariationSet:
    """A base (scale, progression) pair with its three alternates."""

    base: tuple[Scale, NumericProgression]
    alternates: tuple[tuple[Scale, NumericProgression], ...]


def alternates(base: Scale, progression: NumericProgression) -> VariationSet:
    """The three alternate (scale, progression) pairs for a base pair.

    The token sequence is identical across all four progressions; only the
    scale (and hence the mode tag on the progression) changes. Raises
    UnspellableNoteError if an alternate tonic cannot seed a legal scale.
    """
    if progression.mode is not base.mode:
        raise ValueError(
            f"progression mode {progression.mode.value} does not match scale {base.id}"
        )
    pairs = []
    for degree_index, mode in _VARIATION_PLAN[base.mode]:
        scale = build_scale(base.degrees[degree_index], mode)
        pairs.append((scale, NumericProgression(mode, progression.tokens)))
    return VariationSet((base, progression), tuple(pairs))


def realize_progression(scale: Scale, tokens: tuple[int, ...]) -> list[DiatonicChord]:
    """Render a token sequence on a scale, chord by chord.

    Handles the one cross-mode case variations create: a minor progression
    containing token 8 ("7Maj") replayed on a major alternate scale. Major
    scales have no such degree token, so the chord falls back to the token's
    definition, the major triad on the scale's seventh note.
    """
    chords = []
    for token in tokens:
        if token == SUBTONIC_MAJOR_TOKEN and scale.mode is Mode.MAJOR:
            chords.append(subtonic_major_chord(scale))
        else:
            chords.append(diatonic_chord(scale, token))
    return chords
