"""
Data models: ring elements, codes, reports and errors.
"""

from .ring import Decomposition, Residue, RingParams, RingVector, WeightAssignment
from .code import CodeType, GeneratorMatrix, GrayImageSet, GrayVector, LinearCode
from .reports import (
    AnalysisReport, BoundReport, GeneralBoundReport, KernelResult, RankNullityReport,
    SearchRecord, SearchSpec, SkippedAnalysis, SumIdentityReport,
)
from .exceptions import (
    EnumerationLimitError, ExponentError, InvariantViolation, LengthMismatchError,
    MatrixFormatError, MissingWeightError, ModulusOverflowError, NonPrimeError,
    RingConstructionError, RingMismatchError, SearchSpecError, TypeConstraintError,
    UndefinedDistanceError, ZpsCodesError,
)

__all__ = [
    # Ring
    'Decomposition', 'Residue', 'RingParams', 'RingVector', 'WeightAssignment',
    # Codes
    'CodeType', 'GeneratorMatrix', 'GrayImageSet', 'GrayVector', 'LinearCode',
    # Reports
    'AnalysisReport', 'BoundReport', 'GeneralBoundReport', 'KernelResult', 'RankNullityReport',
    'SearchRecord', 'SearchSpec', 'SkippedAnalysis', 'SumIdentityReport',
    # Errors
    'EnumerationLimitError', 'ExponentError', 'InvariantViolation', 'LengthMismatchError',
    'MatrixFormatError', 'MissingWeightError', 'ModulusOverflowError', 'NonPrimeError',
    'RingConstructionError', 'RingMismatchError', 'SearchSpecError', 'TypeConstraintError',
    'UndefinedDistanceError', 'ZpsCodesError',
]
