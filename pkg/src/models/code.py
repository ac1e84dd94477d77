"""
Code data models: generator matrices, code types, linear codes and Gray images.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from .exceptions import InvariantViolation, LengthMismatchError, RingMismatchError
from .ring import RingParams, RingVector


@dataclass(frozen=True)
class GeneratorMatrix:
    """Generator rows of a code of length n over one ring."""
    ring: RingParams
    n: int
    rows: Tuple[RingVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(self.rows))
        for index, row in enumerate(self.rows):
            if row.ring != self.ring:
                raise RingMismatchError(f"row {index} is over {row.ring}, matrix is over {self.ring}")
            if len(row) != self.n:
                raise LengthMismatchError(f"row {index} has length {len(row)}, expected {self.n}")

    @classmethod
    def from_lists(cls, ring: RingParams, n: int, rows: Sequence[Sequence[int]]) -> 'GeneratorMatrix':
        """Build a matrix from plain integer rows, reducing entries mod p^s."""
        for index, row in enumerate(rows):
            if len(row) != n:
                raise LengthMismatchError(f"row {index} has length {len(row)}, expected {n}")
        return cls(ring, n, tuple(ring.vector(row) for row in rows))

    def as_lists(self) -> List[List[int]]:
        return [list(row.entries) for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CodeType:
    """Type vector (delta_0, ..., delta_{s-1}): pivot rows per p-adic valuation."""
    deltas: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'deltas', tuple(self.deltas))
        if any(d < 0 for d in self.deltas):
            raise ValueError(f"type entries must be non-negative: {self.deltas}")

    @property
    def s(self) -> int:
        return len(self.deltas)

    @property
    def rank(self) -> int:
        return sum(self.deltas)

    @property
    def free_rank(self) -> int:
        return self.deltas[0] if self.deltas else 0

    def size(self, p: int) -> int:
        """prod_i p^{(s-i) delta_i}"""
        return p ** self.size_exponent

    @property
    def size_exponent(self) -> int:
        return sum((self.s - i) * d for i, d in enumerate(self.deltas))

    @property
    def log_size(self) -> Fraction:
        """log_{p^s} |C| as an exact rational."""
        return Fraction(self.size_exponent, self.s)

    def is_free(self) -> bool:
        return self.free_rank > 0 and not any(self.deltas[1:])

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.deltas) + ")"


@dataclass(frozen=True)
class LinearCode:
    """A linear code over Z_{p^s} held in standard form.

    ``standard_form`` rows are stored in the caller's coordinates; row j has
    pivot ``p^{valuation_j}`` at ``pivots[j][0]`` and zeros at the pivot
    columns of all earlier rows. ``column_permutation`` lists pivot columns
    first, then the remaining columns, which is the order that brings the
    matrix to block upper-triangular shape.
    """
    ring: RingParams
    n: int
    standard_form: GeneratorMatrix
    pivots: Tuple[Tuple[int, int], ...]
    column_permutation: Tuple[int, ...]
    type: CodeType

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def free_rank(self) -> int:
        return self.type.free_rank

    @property
    def size(self) -> int:
        return self.type.size(self.ring.p)

    @property
    def log_size(self) -> Fraction:
        return self.type.log_size

    @property
    def rows(self) -> Tuple[RingVector, ...]:
        return self.standard_form.rows

    def row_valuations(self) -> Tuple[int, ...]:
        return tuple(valuation for _, valuation in self.pivots)

    def is_zero(self) -> bool:
        return not self.pivots

    def __str__(self) -> str:
        return f"[{self.n}, type {self.type}] code over {self.ring}"


@dataclass(frozen=True, order=True)
class GrayVector:
    """A vector over F_p produced by the Gray map; ordered lexicographically."""
    entries: Tuple[int, ...]
    p: int = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(self.entries))
        for entry in self.entries:
            if not 0 <= entry < self.p:
                raise ValueError(f"{entry} is not a residue mod {self.p}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __add__(self, other: 'GrayVector') -> 'GrayVector':
        if len(other) != len(self):
            raise LengthMismatchError(f"lengths {len(self)} and {len(other)} differ")
        return GrayVector(tuple((a + b) % self.p for a, b in zip(self.entries, other.entries)), self.p)

    def digits(self) -> str:
        sep = "" if self.p <= 10 else ","
        return sep.join(str(a) for a in self.entries)


@dataclass(frozen=True)
class GrayImageSet:
    """phi_L(C) together with the size of the source code."""
    images: FrozenSet[GrayVector]
    source_size: int

    def __post_init__(self):
        if len(self.images) != self.source_size:
            raise InvariantViolation(
                f"Gray map not injective: {self.source_size} codewords, {len(self.images)} images"
            )

    def __len__(self) -> int:
        return len(self.images)

    def __contains__(self, item: GrayVector) -> bool:
        return item in self.images

    def sorted(self) -> List[GrayVector]:
        return sorted(self.images)
