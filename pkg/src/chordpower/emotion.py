"""Signed emotional-power evaluation of chords and generic situations.

The power value of a chord is the base-2 log of the geometric mean of
its main-proportion numbers, signed by direction: positive when the main
proportion is direct (major character), negative when it is inverse
(minor character).  A second value is computed for the side proportion;
when the two nearly cancel the chord is effectively neutral and the
utilitarian value is their half-sum.

Generic (non-musical) situations are scored the same way: the power is
the base-2 log of the ratio of the current to the previous objective
value, optionally scaled by a need factor.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from chordpower.errors import NonPositiveObjective, NotADyad
from chordpower.proportions import (
    Chord,
    Direction,
    Group,
    Proportion,
    direct_proportion,
    proportion_pair,
)

# |pwe + pwe2| below this neutralizes the utilitarian response (half-sum rule).
NEUTRAL_THRESHOLD = 0.50
# |pwe| at or above this sits in the perceptual saturation region.
SATURATION_BOUND = 2.4
# |pwe| above this exceeds the valid range for major/minor perception.
VALID_RANGE_BOUND = 3.0


class Classification(enum.Enum):
    MAJOR = "major"
    MINOR = "minor"
    SYMMETRIC = "symmetric"
    AESTHETIC_ONLY = "aesthetic_only"


@dataclass(frozen=True)
class EmotionReport:
    """Evaluation result for one chord.

    ``pwe`` and ``pwe2`` are the signed power values of the main and side
    proportions, in bits.  ``utilitarian`` is the effective signed value
    after the neutralization rule (0 for symmetric chords and for chords
    of fewer than three voices).  ``relative_objective`` is 2**pwe, the
    geometric mean of the main-proportion values.  Flags mark perceptual
    caveats; they never modify the numbers.
    """

    pwe: float
    pwe2: float
    utilitarian: float
    classification: Classification
    flags: frozenset[str]
    relative_objective: float


def pwe_of(proportion: Proportion) -> float:
    """Signed power of one proportion: (1/M)*log2(product).

    Inverse proportions count as reciprocal fractions, so their value is
    negated.
    """
    value = math.log2(proportion.product) / len(proportion.numbers)
    if proportion.direction is Direction.INVERSE:
        return 0.0 - value  # not -value: keeps the unison at +0.0
    return value


def resolve_report(
    voices: int,
    group: Group,
    pwe: float,
    pwe2: float,
    *,
    neutral_threshold: float = NEUTRAL_THRESHOLD,
    saturation_bound: float = SATURATION_BOUND,
    valid_range_bound: float = VALID_RANGE_BOUND,
) -> EmotionReport:
    """Classification, utilitarian value and flags from raw power values.

    Shared by :func:`analyze` and the triad-space enumeration kernels so a
    record and a fresh analysis can never drift apart.
    """
    flags = set()
    if voices == 1:
        flags.add("monad")
    elif voices == 2:
        flags.add("dyad")
    elif voices >= 4:
        flags.add("extended_chord")
    if abs(pwe) >= saturation_bound:
        flags.add("saturation")
    if abs(pwe) > valid_range_bound:
        flags.add("beyond_valid_range")

    near_neutral = abs(pwe + pwe2) < neutral_threshold
    if near_neutral:
        flags.add("near_neutral")

    # Utilitarian emotions need more than two voices; with two, every
    # chord has equal direct and inverse products anyway (always G3).
    if voices <= 2:
        classification = Classification.AESTHETIC_ONLY
        utilitarian = 0.0
    elif group is Group.G3:
        classification = Classification.SYMMETRIC
        utilitarian = 0.0
    else:
        classification = (
            Classification.MAJOR if group is Group.G1 else Classification.MINOR
        )
        utilitarian = (pwe + pwe2) / 2 if near_neutral else pwe

    return EmotionReport(
        pwe=pwe,
        pwe2=pwe2,
        utilitarian=utilitarian,
        classification=classification,
        flags=frozenset(flags),
        relative_objective=2.0**pwe,
    )


def analyze(chord: Chord, **thresholds: float) -> EmotionReport:
    """Full evaluation of a chord.

    Pure function of the direct proportion: equivalent chords yield
    identical reports.  Threshold keyword arguments are passed through to
    :func:`resolve_report`.
    """
    pair = proportion_pair(chord)
    return resolve_report(
        len(chord), pair.group, pwe_of(pair.main), pwe_of(pair.side), **thresholds
    )


def relative_objective_power(s0: float, s1: float) -> float:
    """log2(s1/s0): positive iff the objective value grew."""
    if s0 <= 0 or s1 <= 0:
        raise NonPositiveObjective(f"objective values must be > 0: s0={s0}, s1={s1}")
    return math.log2(s1 / s0)


@dataclass(frozen=True)
class SituationParams:
    """A before/after objective-value pair with a need factor."""

    s0: float
    s1: float
    need_factor: float

    def __post_init__(self):
        if self.s0 <= 0 or self.s1 <= 0:
            raise NonPositiveObjective(
                f"objective values must be > 0: s0={self.s0}, s1={self.s1}"
            )
        if self.need_factor < 0:
            raise ValueError(f"need_factor must be >= 0, got {self.need_factor}")


def scaled_emotion(params: SituationParams) -> float:
    """Need-scaled power: need_factor * log2(s1/s0)."""
    return params.need_factor * relative_objective_power(params.s0, params.s1)


def harmonic_distance(dyad: Chord) -> float:
    """log2(a*b) for a two-voice chord with direct proportion a:b.

    Equals twice the dyad's power value.
    """
    if len(dyad) != 2:
        raise NotADyad(f"harmonic distance needs exactly 2 voices, got {len(dyad)}")
    return math.log2(direct_proportion(dyad).product)
