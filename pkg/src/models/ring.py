"""
Ring data models: the ambient ring Z_{p^s}, its residues and vectors.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple

from ..config.settings import MAX_MODULUS
from .exceptions import (
    ExponentError, LengthMismatchError, ModulusOverflowError,
    NonPrimeError, RingMismatchError
)

# p-adic valuation of zero
INFINITE_VALUATION = math.inf


def is_prime(value: int) -> bool:
    """Trial-division primality test."""
    if value < 2:
        return False
    if value % 2 == 0:
        return value == 2
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


@dataclass(frozen=True)
class RingParams:
    """The ring Z_{p^s} with cached powers of p."""
    p: int
    s: int
    modulus: int = field(init=False, compare=False)
    half_power: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.p < 2:
            raise NonPrimeError(f"{self.p} is not prime")
        if self.s < 1:
            raise ExponentError(f"exponent s must be >= 1, got {self.s}")
        # size limits are checked before the primality test
        if self.p > MAX_MODULUS or self.s > 32 or self.p ** self.s > MAX_MODULUS:
            raise ModulusOverflowError(
                f"{self.p}^{self.s} exceeds the supported modulus {MAX_MODULUS}"
            )
        if not is_prime(self.p):
            raise NonPrimeError(f"{self.p} is not prime")
        object.__setattr__(self, 'modulus', self.p ** self.s)
        object.__setattr__(self, 'half_power', self.p ** (self.s - 1))

    def __str__(self) -> str:
        return f"Z_{self.modulus}"

    def power(self, exponent: int) -> int:
        """p^exponent reduced mod p^s (zero once exponent >= s)."""
        if exponent >= self.s:
            return 0
        return self.p ** exponent

    def reduce(self, value: int) -> int:
        return value % self.modulus

    def residue(self, value: int) -> 'Residue':
        return Residue(self, value % self.modulus)

    def vector(self, values: Iterable[int]) -> 'RingVector':
        """Build a vector, reducing every entry mod p^s."""
        return RingVector(self, tuple(v % self.modulus for v in values))


@dataclass(frozen=True)
class Residue:
    """A canonical element of Z_{p^s}."""
    ring: RingParams
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise ValueError(f"{self.value} is not a canonical residue of {self.ring}")

    def _check(self, other: 'Residue') -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine {self.ring} and {other.ring}")

    def __add__(self, other: 'Residue') -> 'Residue':
        self._check(other)
        return Residue(self.ring, (self.value + other.value) % self.ring.modulus)

    def __sub__(self, other: 'Residue') -> 'Residue':
        self._check(other)
        return Residue(self.ring, (self.value - other.value) % self.ring.modulus)

    def __mul__(self, other: 'Residue') -> 'Residue':
        self._check(other)
        return Residue(self.ring, (self.value * other.value) % self.ring.modulus)

    def __neg__(self) -> 'Residue':
        return Residue(self.ring, (-self.value) % self.ring.modulus)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Decomposition:
    """Division-algorithm split x = q * p^{s-1} + r."""
    q: int
    r: int

    def value(self, half_power: int) -> int:
        return self.q * half_power + self.r


@dataclass(frozen=True)
class RingVector:
    """A length-n tuple of canonical residues, tagged with its ring."""
    ring: RingParams
    entries: Tuple[int, ...]

    def __post_init__(self):
        modulus = self.ring.modulus
        for entry in self.entries:
            if not 0 <= entry < modulus:
                raise ValueError(f"{entry} is not a canonical residue of {self.ring}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def _check(self, other: 'RingVector') -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine {self.ring} and {other.ring}")
        if len(other) != len(self):
            raise LengthMismatchError(f"lengths {len(self)} and {len(other)} differ")

    def __add__(self, other: 'RingVector') -> 'RingVector':
        self._check(other)
        m = self.ring.modulus
        return RingVector(self.ring, tuple((a + b) % m for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: 'RingVector') -> 'RingVector':
        self._check(other)
        m = self.ring.modulus
        return RingVector(self.ring, tuple((a - b) % m for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'RingVector':
        m = self.ring.modulus
        return RingVector(self.ring, tuple((-a) % m for a in self.entries))

    def scale(self, scalar: int) -> 'RingVector':
        m = self.ring.modulus
        return RingVector(self.ring, tuple((scalar * a) % m for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class WeightAssignment:
    """Per-residue weights a_r of a general weight function, with a_0 = 0."""
    ring: RingParams
    weights: Mapping[int, Fraction]
    max_weight: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        normalized = {r % self.ring.modulus: Fraction(a) for r, a in self.weights.items()}
        if normalized.get(0, Fraction(0)) != 0:
            raise ValueError("a_0 must be 0")
        normalized[0] = Fraction(0)
        for residue, weight in normalized.items():
            if residue != 0 and weight <= 0:
                raise ValueError(f"weight of {residue} must be positive, got {weight}")
        object.__setattr__(self, 'weights', normalized)
        object.__setattr__(self, 'max_weight', max(normalized.values()))

    @classmethod
    def hamming(cls, ring: RingParams) -> 'WeightAssignment':
        """a_r = 1 for every nonzero r."""
        return cls(ring, {r: Fraction(1) for r in range(1, ring.modulus)})

    @classmethod
    def lee(cls, ring: RingParams) -> 'WeightAssignment':
        """a_r = extended Lee weight of r."""
        h, m = ring.half_power, ring.modulus
        return cls(ring, {r: Fraction(min(r, h, m - r)) for r in range(1, m)})
