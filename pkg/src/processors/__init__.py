"""
Processing modules: code analysis and code search.
"""

from .code_analyzer import CodeAnalyzer
from .search_harness import build_corpus, random_code, run_search, write_records

__all__ = ['CodeAnalyzer', 'build_corpus', 'random_code', 'run_search', 'write_records']
