"""
Test suite for minimum distances and Singleton-type bound classification.
"""

from fractions import Fraction

import numpy as np
import pytest

from src.models.exceptions import EnumerationLimitError, UndefinedDistanceError
from src.models.ring import RingParams, WeightAssignment
from src.utils.bounds import classify, general_singleton_report, min_hamming_distance, min_lee_distance
from src.utils.gray_map import gray_matrix
from src.utils.linear_code import ambient_code, code_from_lists, codeword_array, zero_code


class TestMinimumDistance:
    """Test cases for minimum Lee and Hamming distance."""

    def setup_method(self):
        self.z9 = RingParams(3, 2)
        self.z4 = RingParams(2, 2)

    def test_pair_code(self, z9_pair):
        d, witness = min_lee_distance(z9_pair)
        assert d == 3
        assert witness.entries in {(1, 2), (8, 7)}
        assert min_hamming_distance(z9_pair) == 2

    def test_first_minimal_codeword_is_the_witness(self, z9_pair):
        _, witness = min_lee_distance(z9_pair)
        assert witness.entries == (1, 2)

    def test_three(self, z9_three):
        assert min_lee_distance(z9_three)[0] == 3
        assert min_hamming_distance(z9_three) == 1

    def test_z4_two(self):
        assert min_lee_distance(code_from_lists(self.z4, 1, [[2]]))[0] == 2

    def test_ambient(self):
        assert min_hamming_distance(ambient_code(self.z9, 2)) == 1

    def test_zero_code_undefined(self):
        with pytest.raises(UndefinedDistanceError):
            min_lee_distance(zero_code(self.z9, 2))
        with pytest.raises(UndefinedDistanceError):
            min_hamming_distance(zero_code(self.z9, 2))

    def test_limit(self):
        with pytest.raises(EnumerationLimitError):
            min_lee_distance(ambient_code(self.z9, 3), limit=50)


class TestClassify:
    """Test cases for MLDS / MLDR classification."""

    def test_ambient_is_mlds(self, z9_ambient):
        report = classify(z9_ambient)
        assert report.d_lee == 1
        assert report.lhs == 0
        assert report.mlds_slack == 0
        assert report.is_mlds
        assert report.is_mldr

    def test_three_is_mldr_not_mlds(self, z9_three):
        report = classify(z9_three)
        assert report.d_lee == 3
        assert report.lhs == 0
        assert report.log_size == Fraction(1, 2)
        assert report.mlds_slack == Fraction(1, 2)
        assert report.mldr_slack == 0
        assert report.is_mldr
        assert not report.is_mlds

    def test_z4_two_is_mldr(self):
        report = classify(code_from_lists(RingParams(2, 2), 1, [[2]]))
        assert report.d_lee == 2
        assert report.lhs == 0
        assert report.is_mldr

    def test_repetition_code(self):
        """<(1,1,1)> over Z_9: d = 3, lhs = 0, n - log = 2."""
        report = classify(code_from_lists(RingParams(3, 2), 3, [[1, 1, 1]]))
        assert report.d_lee == 3
        assert report.mlds_slack == 2
        assert report.mldr_slack == 2


class TestGeneralSingleton:
    """Test cases for the Singleton bound under general weights."""

    def test_hamming_weights_give_classical_bound(self, z9_pair):
        report = general_singleton_report(z9_pair, WeightAssignment.hamming(z9_pair.ring))
        assert report.d_weight == 2
        assert report.lhs == 1
        assert report.slack == 0

    def test_lee_weights_match_classify(self, z9_three):
        report = general_singleton_report(z9_three, WeightAssignment.lee(z9_three.ring))
        assert report.d_weight == 3
        assert report.lhs == 0
        assert report.slack == classify(z9_three).mlds_slack

    def test_fractional_weights(self, z9_ambient):
        weights = WeightAssignment(z9_ambient.ring, {r: Fraction(r, 2) for r in range(1, 9)})
        report = general_singleton_report(z9_ambient, weights)
        assert report.d_weight == Fraction(1, 2)
        assert report.max_weight == 4
        assert report.lhs == -1
        assert report.slack == 1

    def test_zero_code(self, z9_zero):
        with pytest.raises(UndefinedDistanceError):
            general_singleton_report(z9_zero, WeightAssignment.hamming(z9_zero.ring))


class TestBoundsOnCorpus:
    """Bound soundness and distance transfer over the corpus."""

    def test_slacks_non_negative(self, corpus):
        for code in corpus:
            if code.is_zero():
                continue
            report = classify(code)
            assert report.mlds_slack >= 0
            assert report.mldr_slack >= 0
            assert report.lhs <= code.n - code.rank

    def test_distance_sandwich(self, corpus):
        for code in corpus:
            if code.is_zero():
                continue
            report = classify(code)
            assert report.d_hamming <= report.d_lee <= code.ring.half_power * report.d_hamming

    def test_image_distance_equals_lee_distance(self, corpus):
        """The Gray image is injective and its minimum Hamming distance is d_L."""
        for code in corpus:
            words = codeword_array(code)
            images = gray_matrix(code.ring, words)
            assert len({tuple(row) for row in images.tolist()}) == code.size
            if code.is_zero():
                continue
            d_lee = min_lee_distance(code)[0]
            nonzero = images[words.any(axis=1)]
            assert int((nonzero != 0).sum(axis=1).min()) == d_lee
            if code.size <= 256:
                distances = (images[:, None, :] != images[None, :, :]).sum(axis=2)
                off_diagonal = distances[~np.eye(code.size, dtype=bool)]
                assert int(off_diagonal.min()) == d_lee
