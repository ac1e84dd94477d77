"""
Test suite for the extended Lee weight and general weight functions.
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.models.exceptions import LengthMismatchError, MissingWeightError, RingMismatchError
from src.models.ring import RingParams, WeightAssignment
from src.utils.lee_metric import (
    complete_weight, general_weight, hamming_distance, hamming_weight, lee_distance,
    lee_value, lee_weight, lee_weight_vec,
)


class TestLeeWeight:
    """Test cases for the scalar and vector Lee weight."""

    def setup_method(self):
        self.z9 = RingParams(3, 2)
        self.z4 = RingParams(2, 2)

    def test_scalar_branches(self):
        """Values on the three branches of the piecewise definition."""
        assert lee_weight(self.z9.residue(4)) == 3
        assert lee_weight(self.z9.residue(7)) == 2
        assert lee_weight(self.z4.residue(2)) == 2

    def test_full_z9_table(self):
        assert [lee_value(self.z9, x) for x in range(9)] == [0, 1, 2, 3, 3, 3, 3, 2, 1]

    def test_z4_is_classical_lee(self):
        assert [lee_value(self.z4, x) for x in range(4)] == [0, 1, 2, 1]

    def test_boundary_points_agree(self):
        """x = p^{s-1} and x = p^s - p^{s-1} both weigh p^{s-1}."""
        ring = RingParams(5, 2)
        assert lee_value(ring, 5) == 5
        assert lee_value(ring, 20) == 5

    def test_vector_weight(self):
        assert lee_weight_vec(self.z9.vector([1, 2])) == 3
        assert lee_weight_vec(self.z9.vector([0, 0, 0])) == 0
        assert lee_weight_vec(self.z9.vector([4, 8])) == 4

    def test_distance(self):
        assert lee_distance(self.z9.vector([1, 1]), self.z9.vector([1, 1])) == 0
        assert lee_distance(self.z9.vector([1, 0]), self.z9.vector([5, 0])) == 3
        assert lee_distance(self.z4.vector([0, 2]), self.z4.vector([2, 0])) == 4

    def test_distance_rejects_mixed_operands(self):
        with pytest.raises(RingMismatchError):
            lee_distance(self.z9.vector([1]), self.z4.vector([1]))
        with pytest.raises(LengthMismatchError):
            lee_distance(self.z9.vector([1]), self.z9.vector([1, 2]))


class TestHammingAndCompleteWeight:
    """Test cases for Hamming and complete weights."""

    def test_hamming_weight(self):
        assert hamming_weight((0, 0, 0)) == 0
        assert hamming_weight((1, 0, 2)) == 2
        assert hamming_weight((2, 2, 2, 2)) == 4

    def test_hamming_distance(self):
        assert hamming_distance((1, 0, 2), (1, 1, 0)) == 2
        with pytest.raises(LengthMismatchError):
            hamming_distance((1,), (1, 0))

    def test_complete_weight(self):
        z9, z4 = RingParams(3, 2), RingParams(2, 2)
        assert complete_weight(z9.vector([1, 2, 2, 0])) == {0: 1, 1: 1, 2: 2}
        assert complete_weight(z9.vector([0, 0])) == {0: 2}
        assert complete_weight(z4.vector([3, 3, 3])) == {3: 3}


class TestGeneralWeight:
    """Test cases for general weight functions."""

    def setup_method(self):
        self.z9 = RingParams(3, 2)

    def test_all_ones_is_hamming(self):
        weights = WeightAssignment.hamming(self.z9)
        assert general_weight(self.z9.vector([1, 0, 2]), weights) == 3

    def test_lee_assignment_matches_lee_weight(self):
        weights = WeightAssignment.lee(self.z9)
        assert general_weight(self.z9.vector([4, 8]), weights) == 4
        assert weights.max_weight == 3

    def test_zero_vector_weighs_zero(self):
        weights = WeightAssignment(self.z9, {1: Fraction(1, 2)})
        assert general_weight(self.z9.vector([0, 0]), weights) == 0

    def test_missing_weight(self):
        weights = WeightAssignment(self.z9, {1: 1})
        with pytest.raises(MissingWeightError):
            general_weight(self.z9.vector([1, 2]), weights)

    def test_invalid_assignments(self):
        with pytest.raises(ValueError):
            WeightAssignment(self.z9, {0: 1, 1: 1})
        with pytest.raises(ValueError):
            WeightAssignment(self.z9, {1: 0})

    def test_ring_mismatch(self):
        weights = WeightAssignment.hamming(RingParams(2, 2))
        with pytest.raises(RingMismatchError):
            general_weight(self.z9.vector([1]), weights)


SMALL_RINGS = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2)]


@pytest.mark.parametrize("params", SMALL_RINGS)
class TestLeeWeightExhaustive:
    """Scalar Lee weight checked on every element of small rings."""

    def test_symmetric(self, params):
        ring = RingParams(*params)
        for x in range(ring.modulus):
            assert lee_value(ring, x) == lee_value(ring, (-x) % ring.modulus)

    def test_bounded_and_zero_only_at_zero(self, params):
        ring = RingParams(*params)
        assert lee_value(ring, 0) == 0
        for x in range(1, ring.modulus):
            assert 1 <= lee_value(ring, x) <= ring.half_power

    def test_residue_and_value_agree(self, params):
        ring = RingParams(*params)
        assert all(lee_weight(ring.residue(x)) == lee_value(ring, x) for x in range(ring.modulus))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field_lee_is_hamming(p):
    ring = RingParams(p, 1)
    assert [lee_value(ring, x) for x in range(p)] == [hamming_weight([x]) for x in range(p)]


RINGS = st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)])


@given(RINGS, st.lists(st.integers(), min_size=1, max_size=6), st.data())
def test_lee_distance_is_a_metric(params, first, data):
    ring = RingParams(*params)
    n = len(first)
    second = data.draw(st.lists(st.integers(), min_size=n, max_size=n))
    third = data.draw(st.lists(st.integers(), min_size=n, max_size=n))
    u, v, w = ring.vector(first), ring.vector(second), ring.vector(third)
    assert lee_distance(u, v) == lee_distance(v, u)
    assert lee_distance(u, w) <= lee_distance(u, v) + lee_distance(v, w)
    assert (lee_distance(u, v) == 0) == (u == v)


@given(RINGS, st.lists(st.integers(), min_size=1, max_size=6))
def test_lee_bounded_by_hamming(params, values):
    """wt_H(v) <= w_L(v) <= p^{s-1} wt_H(v)."""
    ring = RingParams(*params)
    v = ring.vector(values)
    h = hamming_weight(v.entries)
    assert h <= lee_weight_vec(v) <= ring.half_power * h
    assert general_weight(v, WeightAssignment.lee(ring)) == lee_weight_vec(v)
