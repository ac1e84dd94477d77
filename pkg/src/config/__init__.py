"""
Configuration settings for the Z_{p^s} code analysis toolkit.
"""

from .settings import *

__all__ = [
    'MAX_MODULUS',
    'DEFAULT_MAX_ENUM',
    'DEFAULT_MAX_KERNEL',
    'AMBIENT_ORACLE_LIMIT',
    'SUM_IDENTITY_EXHAUSTIVE_LIMIT',
    'SUM_IDENTITY_DEFAULT_TRIALS',
    'EXHAUSTIVE_CANDIDATE_CAP',
    'DEFAULT_SEARCH_BUDGET',
    'DEFAULT_SEARCH_SEED',
    'SEARCH_TARGETS',
    'CORPUS_SEED',
    'CORPUS_RINGS',
    'CORPUS_MAX_LENGTH',
    'CORPUS_CODES_PER_SHAPE',
    'CORPUS_MAX_SIZE',
    'GRAY_TABLE_MAX_CELLS',
    'KERNEL_PREFILTER_SIZE',
    'JSON_INDENT',
    'RESULTS_FILENAME',
    'LOGGING_CONFIG',
]
