import math
import random
from fractions import Fraction

import pytest
from support import random_chord, random_scale

from chordpower.errors import EmptyChord, NonPositivePitch
from chordpower.proportions import (
    Chord,
    Direction,
    Group,
    Proportion,
    chord_of,
    complement,
    direct_proportion,
    equivalent,
    inverse_proportion,
    normalize_chord,
    proportion_pair,
)

F = Fraction


class TestNormalizeChord:
    def test_sorts(self):
        chord = normalize_chord([F(3, 2), F(1), F(5, 4)])
        assert chord.pitches == (F(1), F(5, 4), F(3, 2))

    def test_single_voice(self):
        assert normalize_chord([440]).pitches == (F(440),)

    def test_duplicates_allowed(self):
        assert len(normalize_chord([1, 1, 2])) == 3

    def test_rejects_empty(self):
        with pytest.raises(EmptyChord):
            normalize_chord([])

    def test_rejects_non_positive(self):
        with pytest.raises(NonPositivePitch):
            normalize_chord([1, -2])
        with pytest.raises(NonPositivePitch):
            normalize_chord([F(0)])

    def test_rejects_floats(self):
        with pytest.raises(TypeError, match="rationalized"):
            normalize_chord([1.5])

    def test_equality_is_literal(self):
        assert chord_of(4, 5, 6) != chord_of(8, 10, 12)
        assert chord_of(4, 5, 6) == normalize_chord([6, 5, 4])


class TestDirectProportion:
    def test_major(self):
        assert direct_proportion(normalize_chord([1, F(5, 4), F(3, 2)])).numbers == (4, 5, 6)

    def test_unison(self):
        p = direct_proportion(chord_of(2, 2, 2))
        assert p.numbers == (1, 1, 1)
        assert p.direction is Direction.DIRECT

    def test_fractional_pitches(self):
        # by hand: lcm(2,4,6)=12 -> (6,9,10), gcd 1
        assert direct_proportion(normalize_chord([F(1, 2), F(3, 4), F(5, 6)])).numbers == (6, 9, 10)

    def test_text_form(self):
        assert str(direct_proportion(chord_of(4, 5, 6))) == "4:5:6"


class TestInverseProportion:
    def test_major(self):
        p = inverse_proportion(chord_of(4, 5, 6))
        assert p.numbers == (15, 12, 10)
        assert p.direction is Direction.INVERSE
        assert str(p) == "/15:/12:/10"

    def test_augmented(self):
        assert inverse_proportion(chord_of(16, 20, 25)).numbers == (25, 20, 16)

    def test_unison_self_reciprocal(self):
        assert inverse_proportion(chord_of(1, 1, 1)).numbers == (1, 1, 1)


class TestProportionPair:
    def test_major_is_g1(self):
        pair = proportion_pair(chord_of(4, 5, 6))
        assert pair.group is Group.G1
        assert pair.direct_product == 120
        assert pair.inverse_product == 1800
        assert pair.main is pair.direct
        assert pair.side is pair.inverse

    def test_minor_is_g2(self):
        pair = proportion_pair(chord_of(10, 12, 15))
        assert pair.group is Group.G2
        assert pair.main.numbers == (6, 5, 4)
        assert pair.main.product == 120

    def test_fifth_stack_is_g3(self):
        pair = proportion_pair(chord_of(4, 6, 9))
        assert pair.group is Group.G3
        assert pair.direct_product == pair.inverse_product == 216
        assert pair.main is pair.direct  # tie-break

    def test_dyads_are_always_g3(self):
        rng = random.Random(11)
        for _ in range(50):
            pair = proportion_pair(random_chord(rng, 2))
            assert pair.group is Group.G3


class TestComplement:
    def test_major_to_minor(self):
        assert complement(chord_of(4, 5, 6)) == chord_of(10, 12, 15)

    def test_g3_is_self_complementary(self):
        c = chord_of(4, 6, 9)
        assert equivalent(complement(c), c)

    def test_three_four_eight(self):
        # reciprocals 1/8, 1/4, 1/3 scale by 24 to 3:6:8
        assert direct_proportion(complement(chord_of(3, 4, 8))).numbers == (3, 6, 8)


class TestEquivalent:
    def test_uniform_scaling(self):
        assert equivalent(normalize_chord([1, F(5, 4), F(3, 2)]), chord_of(4, 5, 6))

    def test_complement_is_not_equivalent(self):
        assert not equivalent(chord_of(4, 5, 6), chord_of(10, 12, 15))

    def test_different_voice_counts(self):
        assert not equivalent(chord_of(1, 2), chord_of(1, 2, 4))


class TestProportionValidation:
    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError, match="coprime"):
            Proportion(Direction.DIRECT, (2, 4, 6))

    def test_rejects_misordered(self):
        with pytest.raises(ValueError, match="ordered"):
            Proportion(Direction.DIRECT, (5, 4, 6))
        with pytest.raises(ValueError, match="ordered"):
            Proportion(Direction.INVERSE, (10, 12, 15))

    def test_rejects_zero(self):
        with pytest.raises(NonPositivePitch):
            Proportion(Direction.DIRECT, (0, 1))


class TestInvariants:
    def test_transposition_invariance(self):
        rng = random.Random(101)
        for _ in range(300):
            chord = random_chord(rng, rng.randint(1, 6))
            k = random_scale(rng)
            scaled = normalize_chord([k * p for p in chord.pitches])
            assert direct_proportion(scaled) == direct_proportion(chord)
            assert inverse_proportion(scaled) == inverse_proportion(chord)

    def test_reciprocity(self):
        rng = random.Random(102)
        for _ in range(300):
            chord = random_chord(rng, rng.randint(1, 6))
            via_complement = direct_proportion(complement(chord))
            assert inverse_proportion(chord).numbers == tuple(reversed(via_complement.numbers))
            assert equivalent(complement(complement(chord)), chord)

    def test_product_identity(self):
        rng = random.Random(103)
        for _ in range(300):
            pair = proportion_pair(random_chord(rng, rng.randint(1, 6)))
            lcm = math.lcm(*pair.direct.numbers)
            assert pair.direct_product * pair.inverse_product == lcm ** len(pair.direct.numbers)

    def test_emitted_tuples_are_coprime(self):
        rng = random.Random(104)
        for _ in range(300):
            pair = proportion_pair(random_chord(rng, rng.randint(1, 6)))
            assert math.gcd(*pair.direct.numbers) == 1
            assert math.gcd(*pair.inverse.numbers) == 1

    def test_g3_iff_self_complement(self):
        rng = random.Random(105)
        for _ in range(300):
            chord = random_chord(rng, rng.randint(1, 6))
            pair = proportion_pair(chord)
            lcm = math.lcm(*pair.direct.numbers)
            is_g3 = pair.group is Group.G3
            assert is_g3 == equivalent(chord, complement(chord))
            assert is_g3 == (pair.direct_product**2 == lcm ** len(chord))

    def test_complement_swaps_g1_and_g2(self):
        rng = random.Random(106)
        swaps = {Group.G1: Group.G2, Group.G2: Group.G1, Group.G3: Group.G3}
        for _ in range(300):
            chord = random_chord(rng, rng.randint(1, 6))
            assert proportion_pair(complement(chord)).group is swaps[proportion_pair(chord).group]
