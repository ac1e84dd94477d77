"""
Report models: bound classification, kernel analysis, full code analysis and search records.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from ..config.settings import SEARCH_TARGETS
from .code import CodeType, GrayVector, LinearCode
from .exceptions import SearchSpecError
from .ring import RingParams, RingVector

SEARCH_MODES = ('exhaustive', 'random')


def encode_value(value: Any) -> Any:
    """Make report values JSON-ready; rationals become {"num", "den"}."""
    if isinstance(value, Fraction):
        return {'num': value.numerator, 'den': value.denominator}
    if isinstance(value, RingVector):
        return list(value.entries)
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(encode_value(v) for v in value)
    if isinstance(value, dict):
        return {k: encode_value(v) for k, v in value.items()}
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    return value


def decode_fraction(value: Any) -> Optional[Fraction]:
    if value is None:
        return None
    return Fraction(value['num'], value['den'])


@dataclass(frozen=True)
class RankNullityReport:
    """Both sides of rank(C) + free rank(C-perp) = n."""
    rank: int
    dual_free_rank: int
    n: int
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'rank': self.rank, 'dual_free_rank': self.dual_free_rank, 'n': self.n, 'holds': self.holds}


@dataclass(frozen=True)
class BoundReport:
    """Minimum distances and the two Lee-weight Singleton-type bounds."""
    d_lee: int
    d_hamming: int
    witness: RingVector
    log_size: Fraction
    lhs: int
    mlds_slack: Fraction
    mldr_slack: int
    is_mlds: bool
    is_mldr: bool


@dataclass(frozen=True)
class GeneralBoundReport:
    """Singleton bound for an arbitrary general weight function."""
    d_weight: Fraction
    max_weight: Fraction
    lhs: int
    slack: Fraction


@dataclass(frozen=True)
class KernelResult:
    """Kernel of the Gray image and the codes that sandwich it."""
    kernel_images: FrozenSet[GrayVector]
    kernel_preimages: FrozenSet[Tuple[int, ...]]
    dim_m: int
    lower_code: LinearCode
    upper_code: LinearCode
    allowed_dims: FrozenSet[int]
    image_size: int

    @property
    def is_image_linear(self) -> bool:
        return len(self.kernel_images) == self.image_size

    @property
    def dim_in_allowed(self) -> bool:
        return self.dim_m in self.allowed_dims


@dataclass(frozen=True)
class SumIdentityReport:
    """Pairs checked for phi(p^{s-1} v + w) = phi(p^{s-1} v) + phi(w)."""
    pairs_checked: int
    exhaustive: bool
    violations: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SkippedAnalysis:
    """An analysis left out because a limit was exceeded."""
    analysis: str
    reason: str
    size: int
    limit: int

    def to_dict(self) -> Dict[str, Any]:
        return {'analysis': self.analysis, 'reason': self.reason, 'size': self.size, 'limit': self.limit}


@dataclass
class AnalysisReport:
    """Every derived statistic of one code, in JSON field order."""
    p: int
    s: int
    n: int
    type: Tuple[int, ...]
    rank: int
    free_rank: int
    size: int
    log_size: Fraction
    column_permutation: Tuple[int, ...]
    d_lee: Optional[int] = None
    d_hamming: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    is_mlds: Optional[bool] = None
    is_mldr: Optional[bool] = None
    mlds_slack: Optional[Fraction] = None
    mldr_slack: Optional[int] = None
    hamming_singleton_slack: Optional[Fraction] = None
    is_self_dual: bool = False
    is_self_orthogonal: bool = False
    rank_nullity: Optional[RankNullityReport] = None
    kernel_dim: Optional[int] = None
    kernel_allowed_dims: Optional[Tuple[int, ...]] = None
    image_linear: Optional[bool] = None
    image_self_orthogonal: Optional[bool] = None
    predicted_nonlinear_image: bool = False
    predicted_self_orthogonal_image: bool = False
    skipped: List[SkippedAnalysis] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ring': {'p': self.p, 's': self.s},
            'n': self.n,
            'type': list(self.type),
            'rank': self.rank,
            'free_rank': self.free_rank,
            'size': self.size,
            'log_size': encode_value(self.log_size),
            'column_permutation': list(self.column_permutation),
            'd_lee': self.d_lee,
            'd_hamming': self.d_hamming,
            'witness': encode_value(self.witness) if self.witness is not None else None,
            'is_mlds': self.is_mlds,
            'is_mldr': self.is_mldr,
            'mlds_slack': encode_value(self.mlds_slack),
            'mldr_slack': self.mldr_slack,
            'hamming_singleton_slack': encode_value(self.hamming_singleton_slack),
            'is_self_dual': self.is_self_dual,
            'is_self_orthogonal': self.is_self_orthogonal,
            'rank_nullity': self.rank_nullity.to_dict() if self.rank_nullity else None,
            'kernel_dim': self.kernel_dim,
            'kernel_allowed_dims': list(self.kernel_allowed_dims) if self.kernel_allowed_dims is not None else None,
            'image_linear': self.image_linear,
            'image_self_orthogonal': self.image_self_orthogonal,
            'predicted_nonlinear_image': self.predicted_nonlinear_image,
            'predicted_self_orthogonal_image': self.predicted_self_orthogonal_image,
            'skipped': [s.to_dict() for s in self.skipped],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AnalysisReport':
        rank_nullity = data.get('rank_nullity')
        return cls(
            p=data['ring']['p'],
            s=data['ring']['s'],
            n=data['n'],
            type=tuple(data['type']),
            rank=data['rank'],
            free_rank=data['free_rank'],
            size=data['size'],
            log_size=decode_fraction(data['log_size']),
            column_permutation=tuple(data['column_permutation']),
            d_lee=data['d_lee'],
            d_hamming=data['d_hamming'],
            witness=tuple(data['witness']) if data['witness'] is not None else None,
            is_mlds=data['is_mlds'],
            is_mldr=data['is_mldr'],
            mlds_slack=decode_fraction(data['mlds_slack']),
            mldr_slack=data['mldr_slack'],
            hamming_singleton_slack=decode_fraction(data['hamming_singleton_slack']),
            is_self_dual=data['is_self_dual'],
            is_self_orthogonal=data['is_self_orthogonal'],
            rank_nullity=RankNullityReport(**rank_nullity) if rank_nullity else None,
            kernel_dim=data['kernel_dim'],
            kernel_allowed_dims=tuple(data['kernel_allowed_dims']) if data['kernel_allowed_dims'] is not None else None,
            image_linear=data['image_linear'],
            image_self_orthogonal=data['image_self_orthogonal'],
            predicted_nonlinear_image=data['predicted_nonlinear_image'],
            predicted_self_orthogonal_image=data['predicted_self_orthogonal_image'],
            skipped=[SkippedAnalysis(**s) for s in data['skipped']],
        )


@dataclass(frozen=True)
class SearchSpec:
    """What to search for and how."""
    ring: RingParams
    n: int
    mode: str = 'random'
    budget: int = 1000
    seed: int = 1
    targets: FrozenSet[str] = frozenset()
    type_constraint: Optional[CodeType] = None

    def __post_init__(self):
        object.__setattr__(self, 'targets', frozenset(self.targets))
        if self.n < 1:
            raise SearchSpecError(f"length must be at least 1, got {self.n}")
        if self.budget < 1:
            raise SearchSpecError(f"budget must be at least 1, got {self.budget}")
        if self.mode not in SEARCH_MODES:
            raise SearchSpecError(f"unknown mode {self.mode!r}; expected one of {', '.join(SEARCH_MODES)}")
        if not self.targets:
            raise SearchSpecError("at least one search target is required")
        unknown = sorted(self.targets - set(SEARCH_TARGETS))
        if unknown:
            raise SearchSpecError(f"unknown targets {unknown}; expected a subset of {SEARCH_TARGETS}")
        if not 0 <= self.seed < 2 ** 64:
            raise SearchSpecError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass
class SearchRecord:
    """One code found by the search harness."""
    index: int
    rows: List[List[int]]
    fingerprint: str
    report: AnalysisReport
    verdicts: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'rows': self.rows,
            'fingerprint': self.fingerprint,
            'verdicts': dict(sorted(self.verdicts.items())),
            'report': self.report.to_dict(),
        }
