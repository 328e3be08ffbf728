"""Exact chord proportion calculus.

A chord is a sorted tuple of positive rational pitches; pitch values are
relative and unit-free.  Every chord reduces to a pair of coprime integer
tuples: the direct proportion (the pitches themselves, ascending) and the
inverse proportion (their reciprocals, written descending with a leading
slash per number, e.g. /15:/12:/10).  Comparing the products of the two
tuples splits chords into three groups:

* G1 - direct product smaller (major character),
* G2 - inverse product smaller (minor character),
* G3 - products equal (symmetric, no sign).

The proportion with the smaller product is the chord's main proportion,
the other its side proportion.  All arithmetic is exact; integers are
arbitrary precision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from chordpower.errors import EmptyChord, NonPositivePitch

Rational = Union[int, Fraction]


class Direction(enum.Enum):
    DIRECT = "direct"
    INVERSE = "inverse"


class Group(enum.Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"


@dataclass(frozen=True)
class Chord:
    """Sorted tuple of positive rational pitches.

    Equality is literal: two chords are equal iff their pitch tuples are
    identical.  Use :func:`equivalent` for equality up to transposition.
    Build chords through :func:`normalize_chord` (or the rationalizer for
    real-valued input); the constructor does not validate.
    """

    pitches: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.pitches)

    def __str__(self) -> str:
        return "Chord[" + ", ".join(str(p) for p in self.pitches) + "]"


@dataclass(frozen=True)
class Proportion:
    """Coprime positive integer tuple with a direction tag.

    Direct proportions are ascending, inverse proportions descending
    (the text form /15:/12:/10 reads highest reciprocal first).  The gcd
    over the whole tuple is 1; pairwise common factors are fine (4:5:6).
    """

    direction: Direction
    numbers: tuple[int, ...]

    def __post_init__(self):
        if not self.numbers:
            raise EmptyChord("proportion needs at least one number")
        if any(n < 1 for n in self.numbers):
            raise NonPositivePitch(f"proportion numbers must be >= 1: {self.numbers}")
        if math.gcd(*self.numbers) != 1:
            raise ValueError(f"proportion numbers must be tuple-coprime: {self.numbers}")
        expected = sorted(self.numbers, reverse=self.direction is Direction.INVERSE)
        if list(self.numbers) != expected:
            raise ValueError(
                f"{self.direction.value} proportion must be ordered: {self.numbers}"
            )

    @property
    def product(self) -> int:
        return math.prod(self.numbers)

    def __str__(self) -> str:
        if self.direction is Direction.DIRECT:
            return ":".join(str(n) for n in self.numbers)
        return ":".join(f"/{n}" for n in self.numbers)


@dataclass(frozen=True)
class ProportionPair:
    """A chord's direct and inverse proportions with their group.

    ``main`` is the proportion with the smaller product; for G3 (equal
    products) it is defined as the direct proportion so the pair is total.
    The products satisfy direct_product * inverse_product = L**M with
    L = lcm of the direct numbers.
    """

    direct: Proportion
    inverse: Proportion
    direct_product: int
    inverse_product: int
    group: Group

    @property
    def main(self) -> Proportion:
        if self.group is Group.G2:
            return self.inverse
        return self.direct

    @property
    def side(self) -> Proportion:
        if self.group is Group.G2:
            return self.direct
        return self.inverse


def normalize_chord(raw_pitches: Iterable[Rational]) -> Chord:
    """Sort and validate pitches into a Chord.

    Accepts ints and Fractions only; real-valued pitches (floats, note
    names, frequencies) go through the rationalizer first.
    """
    pitches = []
    for p in raw_pitches:
        if isinstance(p, float):
            raise TypeError(
                f"float pitch {p!r}: real-valued input must be rationalized first"
            )
        if not isinstance(p, (int, Fraction)):
            raise TypeError(f"pitch must be int or Fraction, got {type(p).__name__}")
        if p <= 0:
            raise NonPositivePitch(f"pitch must be > 0, got {p}")
        pitches.append(Fraction(p))
    if not pitches:
        raise EmptyChord("chord needs at least one pitch")
    return Chord(tuple(sorted(pitches)))


def chord_of(*numbers: Rational) -> Chord:
    """Shorthand: chord_of(4, 5, 6) == normalize_chord([4, 5, 6])."""
    return normalize_chord(numbers)


def direct_proportion(chord: Chord) -> Proportion:
    """Reduce the pitches to their ascending coprime integer tuple.

    Multiplies every pitch by the lcm of the denominators, then divides
    by the gcd of the results.
    """
    denom_lcm = math.lcm(*(p.denominator for p in chord.pitches))
    nums = [int(p * denom_lcm) for p in chord.pitches]
    g = math.gcd(*nums)
    return Proportion(Direction.DIRECT, tuple(n // g for n in nums))


def inverse_proportion(chord: Chord) -> Proportion:
    """Reduce the reciprocal pitches, presented descending.

    Equals L/a_i for each direct number a_i with L = lcm of the direct
    numbers; the result is automatically tuple-coprime.
    """
    direct = direct_proportion(chord)
    lcm = math.lcm(*direct.numbers)
    return Proportion(Direction.INVERSE, tuple(lcm // n for n in direct.numbers))


def proportion_pair(chord: Chord) -> ProportionPair:
    """Both proportions of a chord, with products and group."""
    direct = direct_proportion(chord)
    lcm = math.lcm(*direct.numbers)
    inverse = Proportion(Direction.INVERSE, tuple(lcm // n for n in direct.numbers))
    dp = direct.product
    ip = inverse.product
    if dp < ip:
        group = Group.G1
    elif dp > ip:
        group = Group.G2
    else:
        group = Group.G3
    return ProportionPair(direct, inverse, dp, ip, group)


def complement(chord: Chord) -> Chord:
    """The chord whose pitches are the reciprocals of the input's.

    A:B:C maps to /C:/B:/A, returned in integer form (reciprocals scaled
    by their lcm, ascending): the complement of 4:5:6 is 10:12:15.
    Complements swap groups G1 and G2 and leave G3 chords in their own
    class.
    """
    inverse = inverse_proportion(chord)
    return normalize_chord(tuple(reversed(inverse.numbers)))


def equivalent(a: Chord, b: Chord) -> bool:
    """True iff a = k*b for some rational k > 0.

    Same voice count and same direct proportion.
    """
    if len(a) != len(b):
        return False
    return direct_proportion(a) == direct_proportion(b)
