"""
Inner products, dual codes and self-orthogonality over Z_{p^s}.
"""

import logging
from typing import List

from ..models.code import GeneratorMatrix, LinearCode
from ..models.exceptions import InvariantViolation, LengthMismatchError, RingMismatchError
from ..models.reports import RankNullityReport
from ..models.ring import Residue, RingVector
from .linear_code import code_from_rows

logger = logging.getLogger(__name__)


def inner_product(u: RingVector, v: RingVector) -> Residue:
    """sum u_i v_i mod p^s."""
    if u.ring != v.ring:
        raise RingMismatchError(f"cannot pair vectors over {u.ring} and {v.ring}")
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths {len(u)} and {len(v)} differ")
    return u.ring.residue(sum(a * b for a, b in zip(u.entries, v.entries)))


def _diagonalizing_columns(code: LinearCode) -> List[List[int]]:
    """
    Column operations E with G E diagonal up to the pivot positions.

    Row j of the standard form only has entries of valuation >= its pivot
    valuation outside earlier pivot columns, so every off-pivot entry can be
    cleared by subtracting a multiple of the pivot column. Processing rows in
    order keeps each pivot column supported on its own row only.
    """
    ring, n, m = code.ring, code.n, code.ring.modulus
    rows = [list(row.entries) for row in code.rows]
    transform = [[1 if r == c else 0 for c in range(n)] for r in range(n)]

    for j, (col, i) in enumerate(code.pivots):
        pivot_value = ring.p ** i
        for t in range(n):
            if t == col or rows[j][t] == 0:
                continue
            a = rows[j][t]
            if a % pivot_value:
                raise InvariantViolation(f"entry {a} in row {j} not divisible by pivot {pivot_value}")
            factor = a // pivot_value
            for row in rows:
                row[t] = (row[t] - factor * row[col]) % m
            for row in transform:
                row[t] = (row[t] - factor * row[col]) % m
    return transform


def dual_code(code: LinearCode) -> LinearCode:
    """
    The annihilator C-perp, built from the standard form.

    With G E = D (D carrying p^{i_j} at the pivot positions), v is in C-perp
    iff E^{-1} v solves D u = 0, so C-perp is spanned by p^{s-i_j} times the
    pivot columns of E and by the non-pivot columns of E.
    """
    ring, n = code.ring, code.n
    transform = _diagonalizing_columns(code)
    pivot_valuations = dict(code.pivots)

    generators = []
    for t in range(n):
        column = [transform[r][t] for r in range(n)]
        if t in pivot_valuations:
            factor = ring.power(ring.s - pivot_valuations[t])
            if factor == 0:
                continue
            column = [(factor * x) % ring.modulus for x in column]
        generators.append(RingVector(ring, tuple(column)))

    dual = code_from_rows(GeneratorMatrix(ring, n, tuple(generators)))
    logger.debug(f"Dual of {code} is {dual}")
    return dual


def is_self_orthogonal(code: LinearCode) -> bool:
    """Every pair of standard-form rows (each row with itself included) is orthogonal."""
    rows = code.rows
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            if inner_product(rows[a], rows[b]).value:
                return False
    return True


def is_self_dual(code: LinearCode) -> bool:
    """Self-orthogonal with |C|^2 = p^{sn}."""
    return is_self_orthogonal(code) and 2 * code.type.size_exponent == code.ring.s * code.n


def rank_nullity_check(code: LinearCode) -> RankNullityReport:
    """rank(C) + free rank(C-perp) = n."""
    dual = dual_code(code)
    holds = code.rank + dual.free_rank == code.n
    if not holds:
        logger.warning(f"rank identity failed for {code}: {code.rank} + {dual.free_rank} != {code.n}")
    return RankNullityReport(rank=code.rank, dual_free_rank=dual.free_rank, n=code.n, holds=holds)
