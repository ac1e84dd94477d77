"""
Search harness: exhaustive and random generation of small codes, target
matching, deduplication and the property-suite corpus.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import (
    CORPUS_CODES_PER_SHAPE, CORPUS_MAX_LENGTH, CORPUS_MAX_SIZE, CORPUS_RINGS, CORPUS_SEED,
    EXHAUSTIVE_CANDIDATE_CAP, SEARCH_TARGETS,
)
from ..models.code import CodeType, LinearCode
from ..models.exceptions import EnumerationLimitError, InvariantViolation, SearchSpecError, TypeConstraintError
from ..models.reports import AnalysisReport, SearchRecord, SearchSpec
from ..models.ring import RingParams
from ..utils.linear_code import code_fingerprint, code_from_lists
from .code_analyzer import CodeAnalyzer

logger = logging.getLogger(__name__)


def _generator(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.array([seed, index], dtype=np.uint64)))


def _check_type_constraint(spec: SearchSpec) -> None:
    constraint = spec.type_constraint
    if constraint is None:
        return
    if constraint.s != spec.ring.s:
        raise TypeConstraintError(f"type {constraint} has {constraint.s} entries, ring needs {spec.ring.s}")
    if constraint.rank > spec.n:
        raise TypeConstraintError(f"type {constraint} has rank {constraint.rank} > n = {spec.n}")


def random_rows(spec: SearchSpec, index: int) -> List[List[int]]:
    return _draw_rows(spec, index)[0]


def _draw_rows(spec: SearchSpec, index: int) -> Tuple[List[List[int]], CodeType]:
    """
    Draw generator rows for candidate ``index``, with the type they generate.

    Draws come from a Philox generator keyed with (seed, index), in this order:
      1. without a type constraint, the rank t in [0, n] and then t row
         valuations in [0, s), sorted;
      2. a permutation of the columns, whose first t entries are the pivots;
      3. per row j of valuation i: n integers in [0, p^{s-i}), multiplied by p^i;
         the pivot entry is then set to p^i and earlier pivot columns to zero;
      4. t mixing steps, each a pair (a, b) and a multiplier in [0, p^s):
         row b += multiplier * row a when a != b.
    """
    _check_type_constraint(spec)
    ring, n = spec.ring, spec.n
    p, s, m = ring.p, ring.s, ring.modulus
    rng = _generator(spec.seed, index)

    if spec.type_constraint is not None:
        valuations = [i for i, d in enumerate(spec.type_constraint.deltas) for _ in range(d)]
    else:
        t = int(rng.integers(0, n + 1))
        valuations = sorted(int(i) for i in rng.integers(0, s, size=t))

    columns = [int(c) for c in rng.permutation(n)]
    rows = []
    for j, i in enumerate(valuations):
        scale = p ** i
        row = [int(x) * scale % m for x in rng.integers(0, p ** (s - i), size=n)]
        row[columns[j]] = scale
        for earlier in columns[:j]:
            row[earlier] = 0
        rows.append(row)

    for _ in range(len(rows)):
        a, b = (int(x) for x in rng.integers(0, len(rows), size=2))
        multiplier = int(rng.integers(0, m))
        if a != b:
            rows[b] = [(x + multiplier * y) % m for x, y in zip(rows[b], rows[a])]

    deltas = [0] * s
    for i in valuations:
        deltas[i] += 1
    return rows, CodeType(tuple(deltas))


def random_code(spec: SearchSpec, index: int) -> LinearCode:
    """Deterministic code for (seed, index); its type is the drawn type."""
    rows, drawn = _draw_rows(spec, index)
    code = code_from_lists(spec.ring, spec.n, rows)
    if code.type != drawn:
        raise InvariantViolation(f"drew type {drawn}, standard form has type {code.type}")
    return code


def exhaustive_space_size(spec: SearchSpec) -> int:
    """Number of n x n matrices over Z_{p^s}."""
    return spec.ring.modulus ** (spec.n * spec.n)


def exhaustive_rows(spec: SearchSpec, index: int) -> List[List[int]]:
    """Candidate ``index``: its n^2 base-p^s digits, most significant first, read row by row."""
    m, n = spec.ring.modulus, spec.n
    digits = []
    for _ in range(n * n):
        index, digit = divmod(index, m)
        digits.append(digit)
    digits.reverse()
    return [digits[r * n:(r + 1) * n] for r in range(n)]


def _candidates(spec: SearchSpec) -> Iterator[Tuple[int, List[List[int]]]]:
    if spec.mode == 'exhaustive':
        space = exhaustive_space_size(spec)
        if space > EXHAUSTIVE_CANDIDATE_CAP:
            raise SearchSpecError(
                f"exhaustive space {space} exceeds cap {EXHAUSTIVE_CANDIDATE_CAP}; use random mode"
            )
        for index in range(min(space, spec.budget)):
            yield index, exhaustive_rows(spec, index)
    else:
        _check_type_constraint(spec)
        for index in range(spec.budget):
            yield index, random_rows(spec, index)


def target_verdicts(report: AnalysisReport, targets) -> Dict[str, bool]:
    checks = {
        'mlds': report.is_mlds,
        'mldr': report.is_mldr,
        'self-dual': report.is_self_dual,
        'self-orthogonal-image': report.image_self_orthogonal,
        'linear-image': report.image_linear,
    }
    return {target: checks[target] is True for target in sorted(targets)}


def run_search(spec: SearchSpec, analyzer: Optional[CodeAnalyzer] = None) -> List[SearchRecord]:
    """
    Analyze candidates and keep the codes meeting any requested target.

    Codes are deduplicated by codeword-set fingerprint; the first index wins.
    Candidates whose enumeration exceeds the limits are logged and skipped.

    Args:
        spec: What to search
        analyzer: CodeAnalyzer carrying the enumeration limits

    Returns:
        Matching records sorted by candidate index
    """
    analyzer = analyzer or CodeAnalyzer()
    seen = set()
    records = []
    stats = {'candidates': 0, 'duplicates': 0, 'skipped': 0, 'type_mismatch': 0}

    for index, rows in _candidates(spec):
        stats['candidates'] += 1
        code = code_from_lists(spec.ring, spec.n, rows)
        if spec.type_constraint is not None and code.type != spec.type_constraint:
            stats['type_mismatch'] += 1
            continue
        try:
            fingerprint = code_fingerprint(code, analyzer.max_enum)
        except EnumerationLimitError as e:
            logger.warning(f"Skipping candidate {index}: {e}")
            stats['skipped'] += 1
            continue
        if fingerprint in seen:
            stats['duplicates'] += 1
            continue
        seen.add(fingerprint)

        report = analyzer.analyze(code)
        verdicts = target_verdicts(report, spec.targets)
        if any(verdicts.values()):
            records.append(SearchRecord(index=index, rows=rows, fingerprint=fingerprint,
                                        report=report, verdicts=verdicts))

    records.sort(key=lambda record: record.index)
    logger.info(
        f"Search over {spec.ring}, n={spec.n}: {stats['candidates']} candidates, "
        f"{stats['duplicates']} duplicates, {stats['skipped']} skipped, {len(records)} records"
    )
    return records


def count_by_target(records: Sequence[SearchRecord], targets) -> Dict[str, int]:
    counts = {target: 0 for target in sorted(targets)}
    for record in records:
        for target, hit in record.verdicts.items():
            counts[target] += int(hit)
    return counts


def record_line(record: SearchRecord) -> str:
    return json.dumps(record.to_dict(), sort_keys=True, separators=(',', ':'))


def write_records(records: Sequence[SearchRecord], path: Path) -> None:
    """Write one JSON object per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for record in records:
            f.write(record_line(record) + '\n')
    logger.info(f"Wrote {len(records)} records to {path}")


def read_records(path: Path) -> List[dict]:
    with open(path, 'r', encoding='utf-8') as f:
        return [json.loads(line) for line in f if line.strip()]


def verify_record(data: dict, analyzer: Optional[CodeAnalyzer] = None) -> AnalysisReport:
    """Re-analyze a stored record; its report and verdicts must reproduce."""
    analyzer = analyzer or CodeAnalyzer()
    stored = AnalysisReport.from_dict(data['report'])
    fresh = analyzer.audit(stored, data['rows'])
    verdicts = target_verdicts(fresh, data['verdicts'].keys())
    if verdicts != data['verdicts']:
        raise InvariantViolation(f"record {data['index']} verdicts do not reproduce: {verdicts}")
    return fresh


def build_corpus(seed: int = CORPUS_SEED,
                 rings: Sequence[Tuple[int, int]] = tuple(CORPUS_RINGS),
                 max_length: int = CORPUS_MAX_LENGTH,
                 per_shape: int = CORPUS_CODES_PER_SHAPE,
                 max_size: int = CORPUS_MAX_SIZE) -> List[LinearCode]:
    """
    The fixed property-suite corpus.

    For every ring and every length up to ``max_length``, the first
    ``per_shape`` random codes of size at most ``max_size`` in index order.
    """
    corpus = []
    for p, s in rings:
        ring = RingParams(p, s)
        for n in range(1, max_length + 1):
            spec = SearchSpec(ring=ring, n=n, seed=seed, targets=frozenset(SEARCH_TARGETS))
            index = 0
            kept = 0
            while kept < per_shape:
                code = random_code(spec, index)
                index += 1
                if code.size <= max_size:
                    corpus.append(code)
                    kept += 1
    logger.info(f"Built corpus of {len(corpus)} codes")
    return corpus


def corpus_type_shapes(corpus: Sequence[LinearCode]) -> Dict[RingParams, set]:
    shapes: Dict[RingParams, set] = {}
    for code in corpus:
        shapes.setdefault(code.ring, set()).add(code.type)
    return shapes
