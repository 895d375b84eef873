"""Exception types shared across the package."""


class ChordwalkError(Exception):
    """Base class for all domain errors raised by this package."""


class UnspellableNoteError(ChordwalkError):
    """A note would need an accidental beyond double-sharp or double-flat."""


class MidiRangeError(ChordwalkError):
    """A pitch falls outside the MIDI note range 0..127."""


class InvalidDegreeTokenError(ChordwalkError):
    """A degree token is not defined for the scale's mode."""


class MalformedTableError(ChordwalkError):
    """A transition-table document violates the table invariants."""
