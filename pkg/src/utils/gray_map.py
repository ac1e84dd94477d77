"""
The Gray map phi_L: Z_{p^s} -> F_p^{p^{s-1}} and its coordinatewise extension.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from ..config.settings import DEFAULT_MAX_ENUM, GRAY_TABLE_MAX_CELLS
from ..models.code import GrayImageSet, GrayVector, LinearCode
from ..models.exceptions import EnumerationLimitError, LengthMismatchError
from ..models.ring import Residue, RingParams, RingVector
from .linear_code import enumerate_codewords

logger = logging.getLogger(__name__)


class GrayConvention(Enum):
    """Where the run of increments sits inside each block."""
    LEADING = "leading"
    TRAILING = "trailing"


def _scalar_image(ring: RingParams, x: int,
                  convention: GrayConvention = GrayConvention.LEADING) -> Tuple[int, ...]:
    q, r = divmod(x, ring.half_power)
    block = tuple((q + (1 if i < r else 0)) % ring.p for i in range(ring.half_power))
    return block[::-1] if convention is GrayConvention.TRAILING else block


def _decode_block(ring: RingParams, block: Tuple[int, ...], convention: GrayConvention) -> Optional[int]:
    """Residue whose image is ``block``, or None. The last leading-convention entry is always q."""
    if convention is GrayConvention.TRAILING:
        block = block[::-1]
    q = block[-1]
    bumped = (q + 1) % ring.p
    r = 0
    while r < len(block) and block[r] == bumped:
        r += 1
    if any(entry != q for entry in block[r:]):
        return None
    return q * ring.half_power + r


def table_cells(ring: RingParams) -> int:
    return ring.modulus * ring.half_power


@lru_cache(maxsize=16)
def scalar_table(ring: RingParams, convention: GrayConvention = GrayConvention.LEADING) -> Tuple[Tuple[int, ...], ...]:
    """
    Images of all p^s residues, built once per ring.

    Raises:
        EnumerationLimitError: the table would hold more than GRAY_TABLE_MAX_CELLS entries
    """
    cells = table_cells(ring)
    if cells > GRAY_TABLE_MAX_CELLS:
        raise EnumerationLimitError(f"Gray table of {ring}", cells, GRAY_TABLE_MAX_CELLS)
    table = tuple(_scalar_image(ring, x, convention) for x in range(ring.modulus))
    logger.debug(f"Built {convention.value} Gray table for {ring}")
    return table


@lru_cache(maxsize=16)
def _inverse_table(ring: RingParams, convention: GrayConvention) -> Dict[Tuple[int, ...], int]:
    return {block: x for x, block in enumerate(scalar_table(ring, convention))}


def gray_scalar(a: Residue, convention: GrayConvention = GrayConvention.LEADING) -> GrayVector:
    """
    Gray image of a scalar.

    For x <= p^{s-1} the image has ones in its first x coordinates; above that
    x = q p^{s-1} + r maps to the constant-q vector plus the image of r.
    """
    return GrayVector(_scalar_image(a.ring, a.value, convention), a.ring.p)


def gray_entries(ring: RingParams, values: Iterable[int],
                 convention: GrayConvention = GrayConvention.LEADING) -> Tuple[int, ...]:
    if table_cells(ring) <= GRAY_TABLE_MAX_CELLS:
        table = scalar_table(ring, convention)
        blocks = [table[x] for x in values]
    else:
        blocks = [_scalar_image(ring, x, convention) for x in values]
    out = []
    for block in blocks:
        out.extend(block)
    return tuple(out)


def gray_vec(v: RingVector, convention: GrayConvention = GrayConvention.LEADING) -> GrayVector:
    return GrayVector(gray_entries(v.ring, v.entries, convention), v.ring.p)


def gray_image(code: LinearCode, limit: int = DEFAULT_MAX_ENUM) -> GrayImageSet:
    """phi_L(C) as a set; raises EnumerationLimitError above ``limit`` codewords."""
    images = frozenset(gray_vec(c) for c in enumerate_codewords(code, limit))
    return GrayImageSet(images=images, source_size=code.size)


def gray_preimage(g: GrayVector, ring: RingParams,
                  convention: GrayConvention = GrayConvention.LEADING) -> Optional[RingVector]:
    """The unique vector mapping to ``g``, or None if g is outside the image of the ambient space."""
    block = ring.half_power
    if len(g) % block:
        raise LengthMismatchError(f"length {len(g)} is not a multiple of {block}")
    if table_cells(ring) <= GRAY_TABLE_MAX_CELLS:
        inverse = _inverse_table(ring, convention)
        lookup = inverse.get
    else:
        def lookup(chunk):
            return _decode_block(ring, chunk, convention)
    values = []
    for start in range(0, len(g), block):
        x = lookup(g.entries[start:start + block])
        if x is None:
            return None
        values.append(x)
    return RingVector(ring, tuple(values))


def gray_matrix(ring: RingParams, codewords: np.ndarray) -> np.ndarray:
    """Leading-convention Gray images of the rows of an (N, n) residue array, shape (N, n p^{s-1})."""
    q, r = np.divmod(codewords, ring.half_power)
    increments = np.arange(ring.half_power) < r[..., None]
    images = (q[..., None] + increments) % ring.p
    return images.reshape(codewords.shape[0], codewords.shape[1] * ring.half_power).astype(np.int64)
