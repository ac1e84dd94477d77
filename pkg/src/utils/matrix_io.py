"""
Generator matrix file format.

Line 1 is the header ``p s n k``; k rows of n integers follow. ``#`` starts a
comment and blank lines are ignored.
"""

import logging
from typing import List, Tuple

from ..models.code import GeneratorMatrix
from ..models.exceptions import MatrixFormatError
from .zps_ring import make_ring

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


def _integers(tokens: List[str], line: int) -> List[int]:
    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise MatrixFormatError(f"non-integer token {token!r}", line)
    return values


def parse_matrix_file(text: str) -> GeneratorMatrix:
    """
    Parse a generator matrix file.

    Args:
        text: File contents

    Returns:
        GeneratorMatrix with entries reduced mod p^s

    Raises:
        MatrixFormatError: Malformed header, token or row
        NonPrimeError: p is not prime
    """
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("missing header 'p s n k'")

    header_line, header_tokens = lines[0]
    if len(header_tokens) != 4:
        raise MatrixFormatError(f"header needs 4 integers 'p s n k', got {len(header_tokens)}", header_line)
    p, s, n, k = _integers(header_tokens, header_line)
    if n < 1 or k < 0:
        raise MatrixFormatError(f"need n >= 1 and k >= 0, got n={n}, k={k}", header_line)
    ring = make_ring(p, s)

    body = lines[1:]
    if len(body) != k:
        line = body[k][0] if len(body) > k else None
        raise MatrixFormatError(f"header promises {k} rows, found {len(body)}", line)

    rows = []
    reduced = 0
    for line, tokens in body:
        values = _integers(tokens, line)
        if len(values) != n:
            raise MatrixFormatError(f"row has {len(values)} entries, expected {n}", line)
        reduced += sum(1 for x in values if not 0 <= x < ring.modulus)
        rows.append([x % ring.modulus for x in values])

    if reduced:
        logger.warning(f"Reduced {reduced} entries mod {ring.modulus}")
    logger.info(f"Parsed {k} x {n} generator matrix over {ring}")
    return GeneratorMatrix.from_lists(ring, n, rows)


def format_matrix(matrix: GeneratorMatrix) -> str:
    """Inverse of parse_matrix_file."""
    lines = [f"{matrix.ring.p} {matrix.ring.s} {matrix.n} {len(matrix)}"]
    lines.extend(" ".join(str(x) for x in row.entries) for row in matrix.rows)
    return "\n".join(lines) + "\n"
