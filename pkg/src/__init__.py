"""
zps-codes - linear codes over Z_{p^s} under the extended Lee weight.
"""

__version__ = "1.0.0"

from .models.code import CodeType, GeneratorMatrix, GrayVector, LinearCode
from .models.reports import AnalysisReport, SearchSpec
from .models.ring import RingParams, RingVector
from .processors.code_analyzer import CodeAnalyzer

__all__ = [
    'CodeType', 'GeneratorMatrix', 'GrayVector', 'LinearCode',
    'AnalysisReport', 'SearchSpec',
    'RingParams', 'RingVector',
    'CodeAnalyzer',
]
