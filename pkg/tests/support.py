"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from chordpower.proportions import Chord, normalize_chord


def random_chord(rng: random.Random, voices: int, max_component: int = 60) -> Chord:
    """Random chord with rational pitches num/den <= max_component."""
    pitches = [
        Fraction(rng.randint(1, max_component), rng.randint(1, max_component))
        for _ in range(voices)
    ]
    return normalize_chord(pitches)


def random_integer_chord(rng: random.Random, voices: int, max_n: int) -> Chord:
    return normalize_chord([rng.randint(1, max_n) for _ in range(voices)])


def random_scale(rng: random.Random, max_component: int = 20) -> Fraction:
    return Fraction(rng.randint(1, max_component), rng.randint(1, max_component))


def scan_best_rational(x: float, tolerance_cents: float, max_component: int) -> Fraction:
    """Exhaustive-scan oracle for the rationalizer.

    Enumerates every reduced p/q with p, q <= max_component whose cents
    distance from x is within tolerance and picks the minimum of
    (p*q, |cents error|, p).  Independent of the mediant descent.
    """
    best = None
    best_key = None
    for q in range(1, max_component + 1):
        # candidate numerators bracket the window; +-1 guards float edges
        lo = math.floor(q * x * 2.0 ** (-tolerance_cents / 1200.0)) - 1
        hi = math.ceil(q * x * 2.0 ** (tolerance_cents / 1200.0)) + 1
        for p in range(max(1, lo), min(max_component, hi) + 1):
            if math.gcd(p, q) != 1:
                continue
            err = 1200.0 * math.log2((p / q) / x)
            if abs(err) > tolerance_cents:
                continue
            key = (p * q, abs(err), p)
            if best_key is None or key < best_key:
                best = Fraction(p, q)
                best_key = key
    if best is None:
        raise LookupError(f"oracle: nothing within {tolerance_cents} cents of {x}")
    return best


def brute_force_triad_tuples(max_n: int, octave_only: bool) -> list[tuple[int, int, int]]:
    """Independent gcd-filter enumeration of a <= b <= c <= max_n."""
    found = []
    for a in range(1, max_n + 1):
        for b in range(a, max_n + 1):
            for c in range(b, max_n + 1):
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                if octave_only and c > 2 * a:
                    continue
                found.append((a, b, c))
    return found
