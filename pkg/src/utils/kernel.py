"""
Kernel of the Gray image, independence tests and image-property checks.
"""

import logging
from typing import FrozenSet, List, Optional, Sequence

import numpy as np

from ..config.settings import (
    DEFAULT_MAX_ENUM, DEFAULT_MAX_KERNEL, DEFAULT_SEARCH_SEED, KERNEL_PREFILTER_SIZE,
    SUM_IDENTITY_DEFAULT_TRIALS, SUM_IDENTITY_EXHAUSTIVE_LIMIT,
)
from ..models.code import CodeType, GeneratorMatrix, GrayVector, LinearCode
from ..models.exceptions import (
    EnumerationLimitError, InvariantViolation, LengthMismatchError, RingMismatchError,
)
from ..models.reports import KernelResult, SumIdentityReport
from ..models.ring import RingVector
from .gf_p import gf_p_rank, gf_p_row_reduce
from .gray_map import gray_entries, gray_matrix
from .linear_code import code_from_rows, codeword_array, scaled_generator_code, scaled_rows_code

logger = logging.getLogger(__name__)


def _row_keys(images: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Encode each row as a base-p integer, or None if the keys would overflow int64."""
    length = images.shape[1]
    if p ** length >= 2 ** 62:
        return None
    powers = np.array([p ** k for k in range(length)], dtype=np.int64)
    return images @ powers


def _member(sorted_keys: np.ndarray, query: np.ndarray) -> np.ndarray:
    index = np.searchsorted(sorted_keys, query)
    index = np.minimum(index, len(sorted_keys) - 1)
    return sorted_keys[index] == query


def _kernel_indices(images: np.ndarray, p: int) -> List[int]:
    """Indices a with images[a] + images == images as sets (entrywise mod p)."""
    count = images.shape[0]
    keys = _row_keys(images, p)

    if keys is None:
        image_set = {tuple(row) for row in images.tolist()}
        rows = images.tolist()
        return [
            a for a in range(count)
            if all(tuple((x + y) % p for x, y in zip(rows[a], b)) in image_set for b in rows)
        ]

    sorted_keys = np.sort(keys)
    powers = np.array([p ** k for k in range(images.shape[1])], dtype=np.int64)

    # cheap pass against a few probes, exact pass on the survivors
    probes = np.unique(np.concatenate([
        np.arange(min(KERNEL_PREFILTER_SIZE, count)),
        np.linspace(0, count - 1, min(KERNEL_PREFILTER_SIZE, count)).astype(np.int64),
    ]))
    candidates = np.ones(count, dtype=bool)
    for b in probes:
        sums = (images + images[b]) % p
        candidates &= _member(sorted_keys, sums @ powers)
    survivors = np.nonzero(candidates)[0]
    logger.debug(f"Kernel prefilter kept {len(survivors)} of {count} candidates")

    kernel = []
    for a in survivors:
        sums = (images + images[a]) % p
        if _member(sorted_keys, sums @ powers).all():
            kernel.append(int(a))
    return kernel


def kernel_lower_code(code: LinearCode) -> LinearCode:
    """p^{s-1} times the standard-form rows; its image lies in the kernel."""
    if code.ring.s == 1:
        return code
    return scaled_generator_code(code, code.ring.s - 1)


def kernel_upper_code(code: LinearCode) -> LinearCode:
    """
    Rows of valuation i <= s-3 pushed to valuation s-1; rows of valuation
    s-2 and s-1 kept. The kernel lies inside its image.
    """
    s = code.ring.s
    if s == 1:
        return code
    exponents = [s - 1 - i if i <= s - 3 else 0 for i in code.row_valuations()]
    return scaled_rows_code(code, exponents)


def kernel_inclusion_code(code: LinearCode) -> LinearCode:
    """Codewords of order at most p^2: rows of valuation <= s-2 pushed to valuation s-2."""
    s = code.ring.s
    if s == 1:
        return code
    exponents = [max(s - 2 - i, 0) for i in code.row_valuations()]
    return scaled_rows_code(code, exponents)


def kernel_dim_bounds(code_type: CodeType) -> FrozenSet[int]:
    """
    Dimensions the kernel of a type-delta code can take.

    All integers from rank to rank + delta_{s-2}, leaving out
    rank + delta_{s-2} - 1 when that value exceeds rank.
    """
    s = code_type.s
    if s < 2:
        raise ValueError(f"kernel dimension bounds need s >= 2, got s = {s}")
    low = code_type.rank
    high = low + code_type.deltas[s - 2]
    dims = set(range(low, high + 1))
    if high - 1 > low:
        dims.discard(high - 1)
    return frozenset(dims)


def kernel_of_gray_image(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_KERNEL) -> KernelResult:
    """
    Exact kernel of phi_L(C) by brute force.

    phi_L(v) is kept iff phi_L(v) + phi_L(w) is in phi_L(C) for every w in C.
    Additive closure of the result is checked, not assumed.

    Raises:
        EnumerationLimitError: |C| is above ``limit``
        InvariantViolation: the kernel is not closed under addition
    """
    if limit is not None and code.size > limit:
        raise EnumerationLimitError(f"kernel of {code}", code.size, limit)

    ring, p = code.ring, code.ring.p
    words = codeword_array(code, None)
    images = gray_matrix(ring, words)
    indices = _kernel_indices(images, p)

    kernel_rows = images[indices]
    dim_m = gf_p_rank(kernel_rows, p)
    if p ** dim_m != len(indices):
        logger.warning(f"Kernel of {code} has {len(indices)} elements, not a power of {p}")
        raise InvariantViolation(f"kernel of {code} is not closed under addition")

    if ring.s >= 2:
        allowed = kernel_dim_bounds(code.type)
    else:
        allowed = frozenset({code.rank})

    result = KernelResult(
        kernel_images=frozenset(GrayVector(tuple(int(x) for x in row), p) for row in kernel_rows),
        kernel_preimages=frozenset(tuple(int(x) for x in words[a]) for a in indices),
        dim_m=dim_m,
        lower_code=kernel_lower_code(code),
        upper_code=kernel_upper_code(code),
        allowed_dims=allowed,
        image_size=code.size,
    )
    if not result.dim_in_allowed:
        logger.warning(f"Kernel dimension {dim_m} of {code} outside {sorted(allowed)}")
    logger.debug(f"Kernel of {code}: dimension {dim_m}")
    return result


def is_gray_image_linear(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_KERNEL) -> bool:
    """phi_L(C) is linear iff it fills its own F_p span, since it contains zero."""
    if limit is not None and code.size > limit:
        raise EnumerationLimitError(f"linearity of phi({code})", code.size, limit)
    images = gray_matrix(code.ring, codeword_array(code, None))
    return code.ring.p ** gf_p_rank(images, code.ring.p) == code.size


def _common_ring(vectors: Sequence[RingVector]) -> None:
    if not vectors:
        raise ValueError("need at least one vector")
    ring, n = vectors[0].ring, len(vectors[0])
    for v in vectors[1:]:
        if v.ring != ring:
            raise RingMismatchError(f"vectors over {ring} and {v.ring}")
        if len(v) != n:
            raise LengthMismatchError(f"vector lengths {n} and {len(v)} differ")


def modular_independent(vectors: Sequence[RingVector]) -> bool:
    """No relation sum a_i v_i = 0 with a unit coefficient: the stacked standard form has full rank."""
    _common_ring(vectors)
    stacked = code_from_rows(GeneratorMatrix(vectors[0].ring, len(vectors[0]), tuple(vectors)))
    return stacked.rank == len(vectors)


def phi_independent(vectors: Sequence[RingVector]) -> bool:
    """Gray images linearly independent over F_p."""
    _common_ring(vectors)
    ring = vectors[0].ring
    images = [gray_entries(ring, v.entries) for v in vectors]
    return gf_p_rank(images, ring.p) == len(vectors)


def _sum_identity_failures(code: LinearCode, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Row mask of pairs (v_k, w_k) breaking phi(p^{s-1} v + w) = phi(p^{s-1} v) + phi(w)."""
    ring = code.ring
    top = (ring.half_power * v) % ring.modulus
    left = gray_matrix(ring, (top + w) % ring.modulus)
    right = (gray_matrix(ring, top) + gray_matrix(ring, w)) % ring.p
    return (left != right).any(axis=1)


def check_sum_identity(code: LinearCode, trials: int = SUM_IDENTITY_DEFAULT_TRIALS,
                       seed: int = DEFAULT_SEARCH_SEED,
                       limit: Optional[int] = DEFAULT_MAX_ENUM) -> SumIdentityReport:
    """
    Check phi(p^{s-1} v + w) = phi(p^{s-1} v) + phi(w) on pairs of codewords.

    Codes up to SUM_IDENTITY_EXHAUSTIVE_LIMIT codewords are checked on every
    pair; larger ones on ``trials`` pairs drawn with a Philox generator keyed by ``seed``.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    words = codeword_array(code, limit)
    count = words.shape[0]
    exhaustive = count <= SUM_IDENTITY_EXHAUSTIVE_LIMIT
    if exhaustive:
        first = np.repeat(np.arange(count), count)
        second = np.tile(np.arange(count), count)
    else:
        rng = np.random.Generator(np.random.Philox(key=seed))
        first, second = rng.integers(0, count, size=(2, trials))

    failures = _sum_identity_failures(code, words[first], words[second])
    violations = tuple(
        (tuple(int(x) for x in words[a]), tuple(int(x) for x in words[b]))
        for a, b in zip(first[failures], second[failures])
    )
    if violations:
        logger.warning(f"Sum identity failed on {len(violations)} pairs of {code}")
    return SumIdentityReport(pairs_checked=len(first), exhaustive=exhaustive, violations=violations)


def self_orthogonal_image(code: LinearCode, limit: Optional[int] = DEFAULT_MAX_ENUM) -> bool:
    """
    All pairwise mod-p inner products of phi_L(C) vanish.

    The form is bilinear, so checking a basis of the F_p span of the image is exact.
    """
    p = code.ring.p
    images = gray_matrix(code.ring, codeword_array(code, limit))
    basis, _ = gf_p_row_reduce(images, p)
    if basis.shape[0] == 0:
        return True
    return not ((basis @ basis.T) % p).any()


def predicts_nonlinear_image(code_type: CodeType, p: int) -> bool:
    """Type conditions under which phi_L(C) cannot be linear."""
    s = code_type.s
    if any(code_type.deltas[i] for i in range(max(s - 2, 0))):
        return True
    return p > 2 and s >= 2 and code_type.is_free()


def predicts_self_orthogonal_image(code_type: CodeType) -> bool:
    """Codes with no free rows have a self-orthogonal image."""
    return code_type.free_rank == 0


def image_has_self_dual_size(code: LinearCode) -> bool:
    """|phi_L(C)|^2 = p^{p^{s-1} n}."""
    return 2 * code.type.size_exponent == code.ring.half_power * code.n
