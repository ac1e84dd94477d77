"""
Minimum distances and the Lee-weight Singleton-type bounds.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from ..config.settings import DEFAULT_MAX_ENUM
from ..models.code import LinearCode
from ..models.exceptions import InvariantViolation, RingMismatchError, UndefinedDistanceError
from ..models.reports import BoundReport, GeneralBoundReport
from ..models.ring import RingVector, WeightAssignment
from .lee_metric import general_weight
from .linear_code import codeword_array, enumerate_codewords

logger = logging.getLogger(__name__)


def _nonzero_codewords(code: LinearCode, limit: Optional[int]) -> np.ndarray:
    if code.is_zero():
        raise UndefinedDistanceError(f"minimum distance of the zero code {code} is undefined")
    words = codeword_array(code, limit)
    return words[words.any(axis=1)]


def lee_weights_array(code: LinearCode, words: np.ndarray) -> np.ndarray:
    """Row-wise extended Lee weights of an (N, n) residue array."""
    h, m = code.ring.half_power, code.ring.modulus
    return np.minimum(np.minimum(words, h), m - words).sum(axis=1)


def min_lee_distance(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> Tuple[int, RingVector]:
    """
    Minimum Lee weight over the nonzero codewords, and a codeword attaining it.

    Args:
        code: A nonzero code
        limit: Enumeration limit

    Returns:
        (d, witness); the witness is the first minimal codeword in enumeration order
    """
    words = _nonzero_codewords(code, limit)
    weights = lee_weights_array(code, words)
    best = int(np.argmin(weights))
    witness = RingVector(code.ring, tuple(int(x) for x in words[best]))
    logger.debug(f"d_L({code}) = {int(weights[best])}, witness {witness}")
    return int(weights[best]), witness


def min_hamming_distance(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> int:
    words = _nonzero_codewords(code, limit)
    return int((words != 0).sum(axis=1).min())


def classify(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> BoundReport:
    """
    Place a code against both Singleton-type bounds.

    With A = p^{s-1} and lhs = floor((d - 1) / A):
    MLDS slack is (n - log_{p^s}|C|) - lhs, MLDR slack is (n - rank) - lhs.
    Both are non-negative for every linear code, so a negative value raises
    InvariantViolation.
    """
    d_lee, witness = min_lee_distance(code, limit)
    d_hamming = min_hamming_distance(code, limit)
    lhs = (d_lee - 1) // code.ring.half_power
    log_size = code.log_size
    mlds_slack = (code.n - log_size) - lhs
    mldr_slack = (code.n - code.rank) - lhs

    if mlds_slack < 0 or mldr_slack < 0:
        raise InvariantViolation(
            f"negative Singleton slack for {code}: mlds {mlds_slack}, mldr {mldr_slack}"
        )

    report = BoundReport(
        d_lee=d_lee,
        d_hamming=d_hamming,
        witness=witness,
        log_size=log_size,
        lhs=lhs,
        mlds_slack=mlds_slack,
        mldr_slack=mldr_slack,
        is_mlds=mlds_slack == 0,
        is_mldr=mldr_slack == 0,
    )
    logger.debug(f"Classified {code}: MLDS={report.is_mlds}, MLDR={report.is_mldr}")
    return report


def general_singleton_report(code: LinearCode, weights: WeightAssignment,
                             limit: Optional[int] = DEFAULT_MAX_ENUM) -> GeneralBoundReport:
    """
    floor((d_w - 1) / A) <= n - log_{p^s}|C| for a general weight w with maximum A.

    Hamming weights give the classical Singleton bound.
    """
    if weights.ring != code.ring:
        raise RingMismatchError(f"weights over {weights.ring}, code over {code.ring}")
    if code.is_zero():
        raise UndefinedDistanceError(f"minimum distance of the zero code {code} is undefined")

    d_weight = min(general_weight(c, weights) for c in enumerate_codewords(code, limit) if not c.is_zero())
    lhs = math.floor((d_weight - 1) / weights.max_weight)
    slack = Fraction(code.n) - code.log_size - lhs
    if slack < 0:
        raise InvariantViolation(f"negative general Singleton slack {slack} for {code}")
    return GeneralBoundReport(d_weight=d_weight, max_weight=weights.max_weight, lhs=lhs, slack=slack)
