"""
Exception hierarchy for the Z_{p^s} code analysis toolkit.
"""

from typing import Optional


class ZpsCodesError(Exception):
    """Base class for every error raised by this package."""


class RingConstructionError(ZpsCodesError):
    """Invalid (p, s) pair."""


class NonPrimeError(RingConstructionError):
    """p is not prime."""


class ExponentError(RingConstructionError):
    """s < 1."""


class ModulusOverflowError(RingConstructionError):
    """p^s exceeds the supported modulus."""


class RingMismatchError(ZpsCodesError):
    """Operands belong to different rings."""


class LengthMismatchError(ZpsCodesError):
    """Vector or row lengths disagree."""


class EnumerationLimitError(ZpsCodesError):
    """A sweep would exceed its configured limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class UndefinedDistanceError(ZpsCodesError):
    """Minimum distance requested for the zero code."""


class MissingWeightError(ZpsCodesError):
    """A general weight has no entry for an occurring residue."""


class TypeConstraintError(ZpsCodesError):
    """A type vector cannot be realised at the requested length."""


class MatrixFormatError(ZpsCodesError):
    """Malformed generator matrix file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class SearchSpecError(ZpsCodesError):
    """Invalid SearchSpec field."""


class InvariantViolation(ZpsCodesError):
    """A property guaranteed by theory failed to hold."""
