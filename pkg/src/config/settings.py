"""
Configuration settings for the Z_{p^s} code analysis toolkit.
"""

from typing import Dict, List, Tuple

# Ring limits
MAX_MODULUS = 2 ** 32

# Enumeration limits (CLI flags default to these)
DEFAULT_MAX_ENUM = 2 ** 20
DEFAULT_MAX_KERNEL = 2 ** 12
AMBIENT_ORACLE_LIMIT = 2 ** 22
SUM_IDENTITY_EXHAUSTIVE_LIMIT = 2 ** 8
SUM_IDENTITY_DEFAULT_TRIALS = 256

# Search harness
EXHAUSTIVE_CANDIDATE_CAP = 2 ** 20
DEFAULT_SEARCH_BUDGET = 1000
DEFAULT_SEARCH_SEED = 1
SEARCH_TARGETS: List[str] = [
    'mlds',
    'mldr',
    'self-dual',
    'self-orthogonal-image',
    'linear-image',
]

# Published property-suite corpus
CORPUS_SEED = 20240607
CORPUS_RINGS: List[Tuple[int, int]] = [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)]
CORPUS_MAX_LENGTH = 3
CORPUS_CODES_PER_SHAPE = 34
CORPUS_MAX_SIZE = 2 ** 12

# Gray tables are only built when p^s * p^{s-1} stays below this
GRAY_TABLE_MAX_CELLS = 2 ** 20

# Kernel prefilter: candidates are first tried against this many codewords
KERNEL_PREFILTER_SIZE = 64

# Output
JSON_INDENT = 2
RESULTS_FILENAME = "search_results.ndjson"

# Logging Configuration
LOGGING_CONFIG: Dict[str, str] = {
    'level': 'INFO',
    'format': '%(asctime)s - %(levelname)s - %(name)s - %(message)s'
}
