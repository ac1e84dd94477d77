"""
Linear codes over Z_{p^s}: standard form, type, enumeration and membership.
"""

import hashlib
import itertools
import logging
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import DEFAULT_MAX_ENUM
from ..models.code import CodeType, GeneratorMatrix, LinearCode
from ..models.exceptions import EnumerationLimitError, LengthMismatchError, RingMismatchError
from ..models.ring import INFINITE_VALUATION, RingParams, RingVector
from .zps_ring import order, unit_inverse, unit_part, valuation

logger = logging.getLogger(__name__)


def _select_pivot(ring: RingParams, rows: List[List[int]], remaining: List[int],
                  free_columns: List[int]) -> Optional[Tuple[int, int, int]]:
    """Entry of minimal valuation; ties go to the leftmost column, then the lowest row."""
    best = None
    best_valuation = INFINITE_VALUATION
    for col in free_columns:
        for index in remaining:
            x = rows[index][col]
            if x == 0:
                continue
            v = valuation(ring, x)
            if v < best_valuation:
                best, best_valuation = (index, col, int(v)), v
        if best_valuation == 0:
            break
    return best


def reduce_rows(ring: RingParams, n: int,
                rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[Tuple[int, int]]]:
    """
    Bring generator rows to standard form without moving columns.

    Args:
        ring: The ambient ring
        n: Code length
        rows: Generator rows as canonical integers

    Returns:
        (rows, pivots) where pivots[j] = (column, valuation) for output row j.
        Valuations are non-decreasing, each pivot entry is exactly p^valuation
        and every pivot column is zero in all later rows and in earlier rows of
        the same valuation.
    """
    m = ring.modulus
    work = [list(row) for row in rows if any(row)]
    remaining = list(range(len(work)))
    free_columns = list(range(n))
    order_out: List[int] = []
    pivots: List[Tuple[int, int]] = []

    while remaining:
        choice = _select_pivot(ring, work, remaining, free_columns)
        if choice is None:
            break
        index, col, i = choice
        _, u = unit_part(ring, work[index][col])
        inverse = unit_inverse(ring, u)
        pivot_row = [(inverse * x) % m for x in work[index]]
        work[index] = pivot_row
        pivot_value = ring.p ** i

        for other in range(len(work)):
            if other == index:
                continue
            b = work[other][col]
            factor = b // pivot_value
            if factor:
                work[other] = [(x - factor * y) % m for x, y in zip(work[other], pivot_row)]

        logger.debug(f"Pivot p^{i} at column {col} from row {index}")
        remaining.remove(index)
        free_columns.remove(col)
        order_out.append(index)
        pivots.append((col, i))

    return [work[index] for index in order_out], pivots


def code_from_rows(matrix: GeneratorMatrix) -> LinearCode:
    """
    Build a LinearCode from generator rows.

    The row span is preserved exactly; an empty or all-zero matrix yields the
    zero code of type (0, ..., 0).
    """
    ring, n = matrix.ring, matrix.n
    for index, row in enumerate(matrix.rows):
        if row.ring != ring:
            raise RingMismatchError(f"row {index} is over {row.ring}, expected {ring}")
        if len(row) != n:
            raise LengthMismatchError(f"row {index} has length {len(row)}, expected {n}")

    rows, pivots = reduce_rows(ring, n, [row.entries for row in matrix.rows])
    deltas = [0] * ring.s
    for _, i in pivots:
        deltas[i] += 1

    pivot_columns = [col for col, _ in pivots]
    permutation = tuple(pivot_columns + [c for c in range(n) if c not in pivot_columns])
    standard = GeneratorMatrix(ring, n, tuple(RingVector(ring, tuple(row)) for row in rows))
    code = LinearCode(
        ring=ring,
        n=n,
        standard_form=standard,
        pivots=tuple(pivots),
        column_permutation=permutation,
        type=CodeType(tuple(deltas)),
    )
    logger.debug(f"Built {code}")
    return code


def code_from_lists(ring: RingParams, n: int, rows: Sequence[Sequence[int]]) -> LinearCode:
    return code_from_rows(GeneratorMatrix.from_lists(ring, n, rows))


def zero_code(ring: RingParams, n: int) -> LinearCode:
    return code_from_rows(GeneratorMatrix(ring, n, ()))


def ambient_code(ring: RingParams, n: int) -> LinearCode:
    """The full space Z_{p^s}^n."""
    identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return code_from_lists(ring, n, identity)


def permuted_standard_form(code: LinearCode) -> List[List[int]]:
    """Standard-form rows with ``column_permutation`` applied (block upper-triangular)."""
    return [[row[c] for c in code.column_permutation] for row in code.rows]


def _coefficient_ranges(code: LinearCode) -> List[int]:
    return [code.ring.p ** (code.ring.s - i) for i in code.row_valuations()]


def _check_limit(code: LinearCode, limit: Optional[int], what: str) -> None:
    if limit is not None and code.size > limit:
        raise EnumerationLimitError(what, code.size, limit)


def enumerate_codewords(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> Iterator[RingVector]:
    """
    Yield every codeword exactly once.

    Codewords are sum_j c_j g_j over the standard-form rows with
    0 <= c_j < p^{s - valuation_j}, in itertools.product order of the
    coefficients. Raises EnumerationLimitError before iterating when the code
    is larger than ``limit``.
    """
    _check_limit(code, limit, f"enumerating {code}")
    ring, n, m = code.ring, code.n, code.ring.modulus
    rows = [row.entries for row in code.rows]
    for coefficients in itertools.product(*(range(r) for r in _coefficient_ranges(code))):
        word = [0] * n
        for c, row in zip(coefficients, rows):
            if c:
                for k in range(n):
                    word[k] += c * row[k]
        yield RingVector(ring, tuple(x % m for x in word))


def codeword_array(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> np.ndarray:
    """All codewords as an (|C|, n) int64 array in ``enumerate_codewords`` order."""
    _check_limit(code, limit, f"enumerating {code}")
    ring = code.ring
    ranges = _coefficient_ranges(code)
    if not ranges:
        return np.zeros((1, code.n), dtype=np.int64)
    if ring.modulus * max(ranges) >= 2 ** 62:
        return np.array([c.entries for c in enumerate_codewords(code, limit)], dtype=np.int64)

    grid = np.indices(ranges, dtype=np.int64).reshape(len(ranges), -1).T
    generators = np.array([row.entries for row in code.rows], dtype=np.int64)
    words = np.zeros((grid.shape[0], code.n), dtype=np.int64)
    for j in range(len(ranges)):
        words = (words + grid[:, j:j + 1] * generators[j]) % ring.modulus
    return words


def codeword_set(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(c.entries for c in enumerate_codewords(code, limit))


def code_fingerprint(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> str:
    """SHA-256 of the sorted codeword list; equal codes share a fingerprint."""
    digest = hashlib.sha256()
    digest.update(f"{code.ring.p},{code.ring.s},{code.n};".encode())
    for word in sorted(codeword_set(code, limit)):
        digest.update((",".join(map(str, word)) + ";").encode())
    return digest.hexdigest()


def contains(code: LinearCode, v: RingVector) -> bool:
    """Membership by reduction against the standard form; no enumeration."""
    if v.ring != code.ring:
        raise RingMismatchError(f"vector over {v.ring}, code over {code.ring}")
    if len(v) != code.n:
        raise LengthMismatchError(f"vector length {len(v)}, code length {code.n}")
    m = code.ring.modulus
    residual = list(v.entries)
    for (col, i), row in zip(code.pivots, code.rows):
        pivot_value = code.ring.p ** i
        x = residual[col]
        if x % pivot_value:
            return False
        factor = x // pivot_value
        if factor:
            residual = [(a - factor * b) % m for a, b in zip(residual, row.entries)]
    return not any(residual)


def vector_order(v: RingVector) -> int:
    """Additive order of v in Z_{p^s}^n: the largest coordinate order."""
    return max((order(v.ring, x) for x in v.entries), default=1)


def scaled_generator_code(code: LinearCode, k: int) -> LinearCode:
    """The code generated by p^k times each standard-form row."""
    if not 0 <= k < code.ring.s:
        raise ValueError(f"scaling exponent must lie in [0, {code.ring.s}), got {k}")
    if k == 0:
        return code
    factor = code.ring.p ** k
    return code_from_rows(GeneratorMatrix(code.ring, code.n, tuple(row.scale(factor) for row in code.rows)))


def scaled_rows_code(code: LinearCode, exponents: Sequence[int]) -> LinearCode:
    """The code generated by p^{exponents[j]} times standard-form row j."""
    rows = tuple(row.scale(code.ring.power(e)) for row, e in zip(code.rows, exponents))
    return code_from_rows(GeneratorMatrix(code.ring, code.n, rows))
