"""Deterministic chord rendering to mono 16-bit PCM WAV.

Voices sit at base_freq scaled by the direct-proportion numbers, so
equivalent chords render identically.  Timbre is either a single sine
per voice or a stack of integer partials with a fixed dB rolloff per
partial; all partials start at zero phase and partials at or above the
Nyquist frequency are dropped.  Buffers get raised-cosine fades at both
ends and are normalized to a configured peak, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence, Union

import numpy as np

from chordpower.errors import AboveNyquist, InvalidConfig, IoFailure, SampleOutOfRange
from chordpower.proportions import Chord, direct_proportion

Destination = Union[str, Path, IO[bytes], None]


@dataclass(frozen=True)
class SynthConfig:
    base_freq: float = 220.0
    duration_s: float = 2.0
    sample_rate: int = 44100
    timbre: str = "pure"  # "pure" or "harmonic"
    partial_count: int = 8
    rolloff_db: float = 6.0
    fade_ms: float = 10.0
    peak: float = 0.9

    def __post_init__(self):
        if self.base_freq <= 0:
            raise InvalidConfig(f"base_freq must be > 0: {self.base_freq}")
        if self.duration_s <= 0:
            raise InvalidConfig(f"duration_s must be > 0: {self.duration_s}")
        if self.sample_rate < 8000:
            raise InvalidConfig(f"sample_rate must be >= 8000: {self.sample_rate}")
        if self.timbre not in ("pure", "harmonic"):
            raise InvalidConfig(f"timbre must be 'pure' or 'harmonic': {self.timbre!r}")
        if self.partial_count < 1:
            raise InvalidConfig(f"partial_count must be >= 1: {self.partial_count}")
        if self.rolloff_db < 0:
            raise InvalidConfig(f"rolloff_db must be >= 0: {self.rolloff_db}")
        if self.fade_ms < 0:
            raise InvalidConfig(f"fade_ms must be >= 0: {self.fade_ms}")
        if not 0 < self.peak <= 1:
            raise InvalidConfig(f"peak must be in (0, 1]: {self.peak}")


def voice_frequencies(chord: Chord, cfg: SynthConfig) -> list[float]:
    """Component frequencies: base_freq times n_i/n_1 of the direct proportion."""
    numbers = direct_proportion(chord).numbers
    return [cfg.base_freq * n / numbers[0] for n in numbers]


def render_chord(chord: Chord, cfg: SynthConfig = SynthConfig()) -> np.ndarray:
    """Mono float buffer of the chord, faded and normalized to cfg.peak."""
    nyquist = cfg.sample_rate / 2
    n = int(round(cfg.duration_s * cfg.sample_rate))
    t = np.arange(n) / cfg.sample_rate
    buf = np.zeros(n)
    for f in voice_frequencies(chord, cfg):
        if cfg.timbre == "pure":
            partials = [(f, 1.0)]
        else:
            partials = [
                (k * f, 10.0 ** (-(k - 1) * cfg.rolloff_db / 20.0))
                for k in range(1, cfg.partial_count + 1)
            ]
        partials = [(pf, amp) for pf, amp in partials if pf < nyquist]
        if not partials:
            raise AboveNyquist(
                f"voice at {f} Hz is at or above the Nyquist frequency {nyquist} Hz"
            )
        for pf, amp in partials:
            buf += amp * np.sin(2.0 * np.pi * pf * t)
    _apply_fades(buf, cfg)
    peak_now = np.max(np.abs(buf)) if n else 0.0
    if peak_now > 0:
        buf *= cfg.peak / peak_now
    return buf


def render_comparison(
    a: Chord, b: Chord, gap_s: float = 0.5, cfg: SynthConfig = SynthConfig()
) -> np.ndarray:
    """a, then gap_s of silence, then b; each segment normalized on its own."""
    if gap_s < 0:
        raise InvalidConfig(f"gap_s must be >= 0: {gap_s}")
    silence = np.zeros(int(round(gap_s * cfg.sample_rate)))
    return np.concatenate([render_chord(a, cfg), silence, render_chord(b, cfg)])


def _apply_fades(buf: np.ndarray, cfg: SynthConfig) -> None:
    fade_n = min(int(round(cfg.fade_ms / 1000.0 * cfg.sample_rate)), len(buf) // 2)
    if fade_n <= 0:
        return
    ramp = 0.5 * (1.0 - np.cos(np.pi * np.arange(fade_n) / fade_n))
    buf[:fade_n] *= ramp
    buf[-fade_n:] *= ramp[::-1]


def write_wav(
    buffer: Union[np.ndarray, Sequence[float]],
    sample_rate: int,
    destination: Destination = None,
) -> bytes:
    """RIFF/WAVE bytes: PCM 16-bit signed little-endian, mono.

    Samples must lie in [-1, 1]; they are scaled by 32767 and quantized
    round-half-away-from-zero.  Byte-identical across runs.
    """
    samples = np.asarray(buffer, dtype=np.float64)
    if samples.ndim != 1:
        raise SampleOutOfRange(f"expected a mono buffer, got shape {samples.shape}")
    if samples.size and (np.max(samples) > 1.0 or np.min(samples) < -1.0):
        raise SampleOutOfRange("samples must lie in [-1, 1]")
    scaled = samples * 32767.0
    quantized = np.where(
        scaled >= 0, np.floor(scaled + 0.5), np.ceil(scaled - 0.5)
    ).astype("<i2")
    data = quantized.tobytes()
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF",
        36 + len(data),
        b"WAVE",
        b"fmt ",
        16,
        1,  # PCM
        1,  # mono
        sample_rate,
        sample_rate * 2,
        2,
        16,
        b"data",
        len(data),
    )
    payload = header + data
    if destination is not None:
        try:
            if hasattr(destination, "write"):
                destination.write(payload)
            else:
                Path(destination).write_bytes(payload)
        except OSError as exc:
            raise IoFailure(f"could not write {destination!r}: {exc}") from exc
    return payload
