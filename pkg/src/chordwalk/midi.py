"""Timed chord events and Standard MIDI File output.

Chords play strictly one after another, each lasting a fixed number of
beats, so tempo alone controls wall-clock pacing. Files are SMF format 0
at 480 ticks per quarter note with a single tempo meta event.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Sequence

from .errors import MidiRangeError
from .pitch import Pitch, SpelledPitchClass, letter_index

TICKS_PER_QUARTER = 480
NOTE_ON_VELOCITY = 80

MIN_TEMPO_BPM = 20
MAX_TEMPO_BPM = 300
MIN_OCTAVE = 1
MAX_OCTAVE = 9

DEFAULT_TEMPO_BPM = 120
DEFAULT_OCTAVE = 4


@dataclass(frozen=True)
class PlaybackConfig:
    """Tempo, register, and per-chord duration for playback and export."""

    tempo_bpm: int = DEFAULT_TEMPO_BPM
    octave: int = DEFAULT_OCTAVE
    chord_duration_beats: Fraction = field(default_factory=lambda: Fraction(1))

    def __post_init__(self) -> None:
        if not MIN_TEMPO_BPM <= self.tempo_bpm <= MAX_TEMPO_BPM:
            raise ValueError(
                f"tempo {self.tempo_bpm} outside {MIN_TEMPO_BPM}..{MAX_TEMPO_BPM} BPM"
            )
        if not MIN_OCTAVE <= self.octave <= MAX_OCTAVE:
            raise ValueError(f"octave {self.octave} outside {MIN_OCTAVE}..{MAX_OCTAVE}")
        if self.chord_duration_beats <= 0:
            raise ValueError("chord duration must be positive")

    @property
    def seconds_per_beat(self) -> Fraction:
        return Fraction(60, self.tempo_bpm)

    @property
    def microseconds_per_quarter(self) -> int:
        return round(Fraction(60_000_000, self.tempo_bpm))


@dataclass(frozen=True)
class TimedChordEvent:
    """Three simultaneous MIDI notes with a start and duration in beats."""

    midi_notes: tuple[int, ...]
    start_beat: Fraction
    duration_beats: Fraction


def get_music_notes(
    chords: Sequence[Sequence[SpelledPitchClass]],
    config: PlaybackConfig,
    *,
    literal_octave: bool = False,
) -> list[tuple[Pitch, ...]]:
    """Place each chord's spellings in the configured register.

    The chord root gets the configured octave; notes whose letters wrap past
    the B-to-C boundary move up one octave, so every triad comes out
    ascending (root < third < fifth). literal_octave=True instead stamps the
    configured octave on every note verbatim, which can voice a chord
    non-ascending. Raises MidiRangeError if any note lands above MIDI 127.
    """
    placed = []
    for chord in chords:
        octave = config.octave
        pitches = []
        previous_letter = None
        for spelled in chord:
            if not literal_octave and previous_letter is not None:
                if letter_index(spelled.letter) < letter_index(previous_letter):
                    octave += 1
            previous_letter = spelled.letter
            if octave > MAX_OCTAVE:
                raise MidiRangeError(
                    f"{spelled}{octave} lies above the top MIDI octave"
                )
            pitch = Pitch(spelled, octave)
            pitch.to_midi()  # fail fast if out of range
            pitches.append(pitch)
        placed.append(tuple(pitches))
    return placed


def to_timed_events(
    chords: Sequence[Sequence[Pitch]],
    config: PlaybackConfig,
) -> list[TimedChordEvent]:
    """Lay chords end to end: chord i starts at beat i x duration, no gaps."""
    if not chords:
        raise ValueError("need at least one chord")
    duration = config.chord_duration_beats
    return [
        TimedChordEvent(
            midi_notes=tuple(p.to_midi() for p in chord),
            start_beat=i * duration,
            duration_beats=duration,
        )
        for i, chord in enumerate(chords)
    ]


def total_seconds(events: Sequence[TimedChordEvent], config: PlaybackConfig) -> Fraction:
    """Exact wall-clock length of a sequential event list."""
    if not events:
        return Fraction(0)
    last = events[-1]
    return (last.start_beat + last.duration_beats) * config.seconds_per_beat


def _variable_length(value: int) -> bytes:
    """MIDI variable-length quantity (7 bits per byte, high bit = continue)."""
    if value < 0:
        raise ValueError("delta time cannot be negative")
    chunks = [value & 0x7F]
    value >>= 7
    while value:
        chunks.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(chunks))


def _beat_to_tick(beat: Fraction) -> int:
    return round(beat * TICKS_PER_QUARTER)


def write_smf(
    events: Sequence[TimedChordEvent],
    config: PlaybackConfig,
    sink: IO[bytes],
) -> int:
    """Write a format-0 Standard MIDI File; returns the byte count written.

    One tempo meta event at tick 0, note-on velocity 80 on channel 0,
    note-offs at start+duration (written before any same-tick note-ons),
    and a final end-of-track meta event.
    """
    timed: list[tuple[int, int, bytes]] = []  # (tick, order, payload)
    tempo = config.microseconds_per_quarter
    timed.append((0, 0, bytes([0xFF, 0x51, 0x03]) + tempo.to_bytes(3, "big")))
    for event in events:
        on_tick = _beat_to_tick(event.start_beat)
        off_tick = _beat_to_tick(event.start_beat + event.duration_beats)
        for note in event.midi_notes:
            timed.append((off_tick, 1, bytes([0x80, note, 0])))
            timed.append((on_tick, 2, bytes([0x90, note, NOTE_ON_VELOCITY])))
    timed.sort(key=lambda item: (item[0], item[1]))

    track = bytearray()
    previous_tick = 0
    for tick, _, payload in timed:
        track += _variable_length(tick - previous_tick)
        track += payload
        previous_tick = tick
    track += _variable_length(0) + bytes([0xFF, 0x2F, 0x00])

    header = b"MThd" + struct.pack(">IHHH", 6, 0, 1, TICKS_PER_QUARTER)
    payload = header + b"MTrk" + struct.pack(">I", len(track)) + bytes(track)
    sink.write(payload)
    return len(payload)
