"""Exact chord proportion calculus with signed emotional-power values.

Chords reduce to coprime direct/inverse integer proportions; comparing
the two products classifies a chord as major, minor or symmetric, and
the base-2 log of the geometric mean of the main proportion gives its
signed power value.  The package also rationalizes real-valued pitch
input, enumerates triad space, and renders chords to WAV for listening.
"""

from chordpower.atlas import (
    TriadRecord,
    enumerate_triads,
    export,
    records_from_json,
    reference_triads,
    render_octave_map,
)
from chordpower.emotion import (
    Classification,
    EmotionReport,
    SituationParams,
    analyze,
    harmonic_distance,
    pwe_of,
    relative_objective_power,
    scaled_emotion,
)
from chordpower.proportions import (
    Chord,
    Direction,
    Group,
    Proportion,
    ProportionPair,
    chord_of,
    complement,
    direct_proportion,
    equivalent,
    inverse_proportion,
    normalize_chord,
    proportion_pair,
)
from chordpower.rationalize import (
    PitchSpec,
    RationalizationConfig,
    best_rational,
    note_to_freq,
    rationalize_chord,
)
from chordpower.synth import SynthConfig, render_chord, render_comparison, write_wav

__version__ = "0.1.0"

__all__ = [
    "Chord",
    "Classification",
    "Direction",
    "EmotionReport",
    "Group",
    "PitchSpec",
    "Proportion",
    "ProportionPair",
    "RationalizationConfig",
    "SituationParams",
    "SynthConfig",
    "TriadRecord",
    "analyze",
    "best_rational",
    "chord_of",
    "complement",
    "direct_proportion",
    "enumerate_triads",
    "equivalent",
    "export",
    "harmonic_distance",
    "inverse_proportion",
    "normalize_chord",
    "note_to_freq",
    "proportion_pair",
    "pwe_of",
    "rationalize_chord",
    "records_from_json",
    "reference_triads",
    "relative_objective_power",
    "render_chord",
    "render_comparison",
    "render_octave_map",
    "scaled_emotion",
    "write_wav",
    "__version__",
]
