"""Exception types raised across the package."""


class ChordPowerError(Exception):
    """Base class for all chordpower errors."""


class EmptyChord(ChordPowerError, ValueError):
    """A chord needs at least one voice."""


class NonPositivePitch(ChordPowerError, ValueError):
    """Pitches must be positive rationals."""


class NonPositiveObjective(ChordPowerError, ValueError):
    """Objective-function values must be positive."""


class NotADyad(ChordPowerError, ValueError):
    """Harmonic distance is defined for two-voice chords only."""


class NoRationalWithinTolerance(ChordPowerError, ValueError):
    """No fraction within the cents tolerance fits the component cap."""


class UnparseableNote(ChordPowerError, ValueError):
    """Note name does not match scientific pitch notation."""


class InvalidConfig(ChordPowerError, ValueError):
    """A configuration value is out of its allowed range."""


class AboveNyquist(ChordPowerError, ValueError):
    """A voice frequency reaches or exceeds half the sample rate."""


class SampleOutOfRange(ChordPowerError, ValueError):
    """Sample values must lie in [-1, 1] before quantization."""


class IoFailure(ChordPowerError, OSError):
    """Writing an export or audio file failed."""


class ParseError(ChordPowerError, ValueError):
    """Chord or pitch text could not be parsed.

    Carries the offending text and the position of the failure.
    """

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} (at position {position} in {text!r})")
