"""Turn real-valued pitch input into low-complexity exact rational chords.

The core calculus wants exact rationals, but pitches arrive as
frequencies, tempered note names, cents offsets or plain reals.  Each
voice is taken as a ratio against the lowest voice and replaced by the
simplest fraction within a cents tolerance: among all p/q with p, q up
to a component cap whose distance |1200*log2((p/q)/x)| stays within the
tolerance, the one minimizing log2(p*q), with ties going to the smaller
cents error and then the smaller numerator.

The search walks the Stern-Brocot tree: the first mediant falling inside
the tolerance window is an ancestor of every other fraction in the
window, so it minimizes numerator and denominator simultaneously and
hence the product.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from chordpower.errors import (
    EmptyChord,
    InvalidConfig,
    NonPositivePitch,
    NoRationalWithinTolerance,
    ParseError,
    UnparseableNote,
)
from chordpower.proportions import Chord, normalize_chord


@dataclass(frozen=True)
class RationalizationConfig:
    """Tolerance, complexity cap and reference pitch for rationalization."""

    tolerance_cents: float = 20.0
    max_component: int = 64
    reference_freq: float = 440.0

    def __post_init__(self):
        if self.tolerance_cents <= 0:
            raise InvalidConfig(f"tolerance_cents must be > 0: {self.tolerance_cents}")
        if self.max_component < 1:
            raise InvalidConfig(f"max_component must be >= 1: {self.max_component}")
        if self.reference_freq <= 0:
            raise InvalidConfig(f"reference_freq must be > 0: {self.reference_freq}")


DEFAULT_CONFIG = RationalizationConfig()

_NOTE_RE = re.compile(r"^([A-Ga-g])([#b]?)(-?\d+)$")
_PITCH_CLASS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}


@dataclass(frozen=True)
class PitchSpec:
    """One voice of pitch input.

    ``kind`` is one of "frequency" (Hz), "note" (scientific pitch
    notation, 12-tone equal temperament), "cents" (offset from the chord
    root), "ratio" (exact rational, bypasses approximation) or "real"
    (relative real number, gets approximated).
    """

    kind: str
    value: Union[float, Fraction, str]

    @classmethod
    def frequency(cls, hz: float) -> "PitchSpec":
        return cls("frequency", float(hz))

    @classmethod
    def note(cls, name: str) -> "PitchSpec":
        return cls("note", name)

    @classmethod
    def cents(cls, offset: float) -> "PitchSpec":
        return cls("cents", float(offset))

    @classmethod
    def ratio(cls, value: Union[int, Fraction]) -> "PitchSpec":
        return cls("ratio", Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "PitchSpec":
        """Parse one pitch token: "440Hz", "A4", "386.3c", "5/4", "1.25".

        Integer and fraction syntax is exact; decimal syntax is a
        measured real that will be approximated.
        """
        token = text.strip()
        if not token:
            raise ParseError(text, 0, "empty pitch token")
        lowered = token.lower()
        if lowered.endswith("hz"):
            try:
                return cls.frequency(float(token[:-2]))
            except ValueError:
                raise ParseError(text, 0, f"bad frequency {token!r}") from None
        if _NOTE_RE.match(token):
            return cls.note(token)
        if lowered.endswith("c"):
            try:
                return cls.cents(float(token[:-1]))
            except ValueError:
                raise ParseError(text, 0, f"bad cents offset {token!r}") from None
        if "." in token:
            try:
                return cls("real", float(token))
            except ValueError:
                raise ParseError(text, 0, f"unrecognized pitch {token!r}") from None
        try:
            return cls.ratio(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(text, 0, f"unrecognized pitch {token!r}") from None


def note_to_freq(name: str, cfg: RationalizationConfig = DEFAULT_CONFIG) -> float:
    """Frequency of a tempered note name, e.g. "Eb4"; A4 = reference_freq."""
    m = _NOTE_RE.match(name.strip())
    if not m:
        raise UnparseableNote(f"not a note name: {name!r}")
    letter, accidental, octave = m.groups()
    pc = _PITCH_CLASS[letter.upper()]
    if accidental == "#":
        pc += 1
    elif accidental == "b":
        pc -= 1
    semitones_from_a4 = (int(octave) - 4) * 12 + pc - 9
    return cfg.reference_freq * 2.0 ** (semitones_from_a4 / 12)


def cents_error(candidate: Fraction, x: float) -> float:
    """Signed distance in cents from x up to candidate."""
    return 1200.0 * math.log2((candidate.numerator / candidate.denominator) / x)


def best_rational(x: float, cfg: RationalizationConfig = DEFAULT_CONFIG) -> Fraction:
    """Simplest fraction within tolerance_cents of x, components capped.

    Mediant descent from 1/1; the first mediant inside the window is the
    unique minimizer of log2(p*q) there, so the tie-break order (smaller
    cents error, then smaller numerator) never has to fire.
    """
    if x <= 0:
        raise NonPositivePitch(f"can only rationalize positive values, got {x}")
    cap = cfg.max_component
    lo = (0, 1)
    hi = (1, 0)
    while True:
        p = lo[0] + hi[0]
        q = lo[1] + hi[1]
        if p > cap or q > cap:
            raise NoRationalWithinTolerance(
                f"no p/q with p,q <= {cap} within {cfg.tolerance_cents} cents of {x}"
            )
        err = 1200.0 * math.log2((p / q) / x)
        if abs(err) <= cfg.tolerance_cents:
            return Fraction(p, q)
        if err < 0:
            lo = (p, q)
        else:
            hi = (p, q)


def resolve_pitch(
    spec: Union[PitchSpec, str, int, float, Fraction],
    cfg: RationalizationConfig = DEFAULT_CONFIG,
) -> tuple[str, Union[float, Fraction]]:
    """Resolve a pitch spec to ("absolute", Hz) or ("relative", ratio).

    Bare ints and Fractions are exact relative ratios; bare floats are
    relative reals to be approximated; strings are parsed.
    """
    if isinstance(spec, str):
        spec = PitchSpec.parse(spec)
    elif isinstance(spec, (int, Fraction)):
        spec = PitchSpec.ratio(spec)
    elif isinstance(spec, float):
        spec = PitchSpec("real", spec)

    if spec.kind == "frequency":
        return "absolute", float(spec.value)
    if spec.kind == "note":
        return "absolute", note_to_freq(str(spec.value), cfg)
    if spec.kind == "cents":
        return "relative", 2.0 ** (float(spec.value) / 1200.0)
    if spec.kind == "ratio":
        return "relative", Fraction(spec.value)
    if spec.kind == "real":
        return "relative", float(spec.value)
    raise ParseError(str(spec), 0, f"unknown pitch kind {spec.kind!r}")


def rationalize_chord(
    specs: Iterable[Union[PitchSpec, str, int, float, Fraction]],
    cfg: RationalizationConfig = DEFAULT_CONFIG,
) -> Chord:
    """Resolve pitch specs, take ratios against the lowest voice, rationalize.

    All voices must be of one reference kind: absolute (frequencies, note
    names) or relative (ratios, cents).  Exact ratios between exact
    voices bypass the approximation.
    """
    resolved = [resolve_pitch(s, cfg) for s in specs]
    if not resolved:
        raise EmptyChord("chord needs at least one pitch")
    kinds = {kind for kind, _ in resolved}
    if len(kinds) > 1:
        raise ParseError(
            str(specs), 0, "cannot mix absolute (Hz, notes) and relative (ratios, cents) voices"
        )
    values = [value for _, value in resolved]
    for i, v in enumerate(values):
        if v <= 0:
            raise NonPositivePitch(f"voice {i}: pitch must be > 0, got {v}")
    root = min(values)
    pitches = []
    for i, v in enumerate(values):
        ratio = v / root
        if isinstance(ratio, Fraction):
            pitches.append(ratio)
            continue
        try:
            pitches.append(best_rational(float(ratio), cfg))
        except NoRationalWithinTolerance as exc:
            raise NoRationalWithinTolerance(f"voice {i}: {exc}") from None
    return normalize_chord(pitches)
