"""
Extended Lee weight, Lee distance, Hamming weight and general weight functions.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable

from ..models.exceptions import LengthMismatchError, MissingWeightError, RingMismatchError
from ..models.ring import Residue, RingParams, RingVector, WeightAssignment

logger = logging.getLogger(__name__)


def lee_value(ring: RingParams, x: int) -> int:
    """Extended Lee weight of a canonical residue x."""
    h, m = ring.half_power, ring.modulus
    if x <= h:
        return x
    if x <= m - h:
        return h
    return m - x


def lee_weight(a: Residue) -> int:
    """
    Extended Lee weight of a scalar.

    Returns x for x <= p^{s-1}, p^{s-1} on the middle range and p^s - x on the
    top range. The branches agree at the two boundary points.
    """
    return lee_value(a.ring, a.value)


def lee_weight_vec(v: RingVector) -> int:
    ring = v.ring
    return sum(lee_value(ring, x) for x in v.entries)


def lee_distance(u: RingVector, v: RingVector) -> int:
    if u.ring != v.ring:
        raise RingMismatchError(f"cannot compare vectors over {u.ring} and {v.ring}")
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths {len(u)} and {len(v)} differ")
    return lee_weight_vec(u - v)


def hamming_weight(v: Iterable[int]) -> int:
    """Number of nonzero coordinates; works for any modulus."""
    return sum(1 for x in v if x)


def hamming_distance(u: Iterable[int], v: Iterable[int]) -> int:
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths {len(u)} and {len(v)} differ")
    return sum(1 for a, b in zip(u, v) if a != b)


def complete_weight(v: RingVector) -> Dict[int, int]:
    """n_r(v) for every residue r occurring in v."""
    return dict(Counter(v.entries))


def general_weight(v: RingVector, weights: WeightAssignment) -> Fraction:
    """sum_r a_r * n_r(v)."""
    if weights.ring != v.ring:
        raise RingMismatchError(f"weights over {weights.ring}, vector over {v.ring}")
    total = Fraction(0)
    for residue, count in complete_weight(v).items():
        if residue not in weights.weights:
            raise MissingWeightError(f"no weight for residue {residue} of {v.ring}")
        total += weights.weights[residue] * count
    return total
