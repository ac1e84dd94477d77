"""GF(p) linear algebra on numpy arrays."""

from typing import Tuple

import numpy as np


def to_gf_p(matrix, p: int) -> np.ndarray:
    # products of two residues must fit in int64
    dtype = np.int64 if p < 2 ** 31 else object
    return np.array(matrix, dtype=dtype) % p


def gf_p_row_reduce(matrix, p: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """
    Reduced row echelon form over GF(p).

    Args:
        matrix: 2-D array of integers
        p: A prime

    Returns:
        (basis, pivots): the nonzero rows of the reduced matrix and their pivot columns
    """
    mat = to_gf_p(matrix, p)
    if mat.ndim != 2 or mat.shape[0] == 0:
        return mat.reshape(0, mat.shape[-1] if mat.ndim == 2 else 0), ()
    n_rows, n_cols = mat.shape
    pivots = []
    row = 0
    for col in range(n_cols):
        nonzero = np.nonzero(mat[row:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        inverse = pow(int(mat[row, col]), -1, p)
        mat[row] = (mat[row] * inverse) % p
        factors = mat[:, col].copy()
        factors[row] = 0
        mat = (mat - np.outer(factors, mat[row])) % p
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    return mat[:row], tuple(pivots)


def gf_p_rank(matrix, p: int) -> int:
    return len(gf_p_row_reduce(matrix, p)[1])
