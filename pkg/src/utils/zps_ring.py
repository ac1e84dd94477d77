"""
Exact arithmetic in Z_{p^s}.

The integer-level helpers (``valuation``, ``order``, ``unit_part`` ...) work on
plain canonical residues and are what the code and kernel modules use in
their inner loops; the ``Residue`` operations wrap them.
"""

import logging
from typing import Tuple, Union

from ..models.exceptions import RingMismatchError
from ..models.ring import INFINITE_VALUATION, Decomposition, Residue, RingParams

logger = logging.getLogger(__name__)


def make_ring(p: int, s: int) -> RingParams:
    """
    Build and validate the ring Z_{p^s}.

    Args:
        p: Prime characteristic of the residue field
        s: Exponent, at least 1

    Returns:
        Validated RingParams

    Raises:
        NonPrimeError, ExponentError, ModulusOverflowError
    """
    ring = RingParams(p, s)
    logger.debug(f"Constructed {ring} (p={p}, s={s})")
    return ring


# Integer-level helpers

def valuation(ring: RingParams, value: int) -> Union[int, float]:
    """Largest i with p^i | value, or INFINITE_VALUATION for zero."""
    value %= ring.modulus
    if value == 0:
        return INFINITE_VALUATION
    i = 0
    while value % ring.p == 0:
        value //= ring.p
        i += 1
    return i


def order(ring: RingParams, value: int) -> int:
    """Additive order p^{s - val_p(value)}; order of zero is 1."""
    v = valuation(ring, value)
    if v == INFINITE_VALUATION:
        return 1
    return ring.p ** (ring.s - int(v))


def unit_part(ring: RingParams, value: int) -> Tuple[int, int]:
    """Split a nonzero value as p^i * u with gcd(u, p) = 1; returns (i, u)."""
    v = valuation(ring, value)
    if v == INFINITE_VALUATION:
        raise ValueError("zero has no unit part")
    i = int(v)
    return i, (value % ring.modulus) // ring.p ** i


def unit_inverse(ring: RingParams, value: int) -> int:
    """Multiplicative inverse of a unit mod p^s."""
    return pow(value % ring.modulus, -1, ring.modulus)


def split(ring: RingParams, value: int) -> Tuple[int, int]:
    """(q, r) with value = q * p^{s-1} + r."""
    return divmod(value % ring.modulus, ring.half_power)


# Residue operations

def _same_ring(a: Residue, b: Residue) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine {a.ring} and {b.ring}")


def add(a: Residue, b: Residue) -> Residue:
    _same_ring(a, b)
    return a + b


def sub(a: Residue, b: Residue) -> Residue:
    _same_ring(a, b)
    return a - b


def mul(a: Residue, b: Residue) -> Residue:
    _same_ring(a, b)
    return a * b


def neg(a: Residue) -> Residue:
    return -a


def is_unit(a: Residue) -> bool:
    """True iff gcd(a, p) = 1."""
    return a.value % a.ring.p != 0


def additive_order(a: Residue) -> int:
    return order(a.ring, a.value)


def p_adic_valuation(a: Residue) -> Union[int, float]:
    return valuation(a.ring, a.value)


def decompose(a: Residue) -> Decomposition:
    """Division algorithm a = q * p^{s-1} + r with 0 <= q < p, 0 <= r < p^{s-1}."""
    q, r = split(a.ring, a.value)
    return Decomposition(q=q, r=r)
