"""
Test suite for GF(p) row reduction.
"""

import numpy as np

from src.utils.gf_p import gf_p_rank, gf_p_row_reduce, to_gf_p


class TestRowReduce:
    """Test cases for gf_p_row_reduce and gf_p_rank."""

    def test_identity(self):
        basis, pivots = gf_p_row_reduce(np.eye(3, dtype=np.int64), 5)
        assert pivots == (0, 1, 2)
        assert (basis == np.eye(3)).all()

    def test_dependent_rows(self):
        assert gf_p_rank([[1, 2, 0], [2, 1, 0]], 3) == 1
        assert gf_p_rank([[1, 2, 0], [2, 1, 0]], 5) == 2

    def test_reduced_form(self):
        basis, pivots = gf_p_row_reduce([[0, 2, 4], [3, 1, 1]], 7)
        assert pivots == (0, 1)
        assert basis.tolist() == [[1, 0, 2], [0, 1, 2]]

    def test_zero_and_empty(self):
        assert gf_p_rank([[0, 0], [0, 0]], 2) == 0
        assert gf_p_rank([], 3) == 0
        basis, pivots = gf_p_row_reduce(np.zeros((0, 4), dtype=np.int64), 3)
        assert basis.shape == (0, 4)
        assert pivots == ()

    def test_entries_reduced(self):
        assert to_gf_p([[5, -1]], 3).tolist() == [[2, 2]]

    def test_binary_rank(self):
        rows = [[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0], [0, 0, 0, 1]]
        assert gf_p_rank(rows, 2) == 3
