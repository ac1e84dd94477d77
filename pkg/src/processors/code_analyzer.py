"""
Full analysis of a linear code over Z_{p^s}: bounds, duality, kernel and image properties.
"""

import logging
from typing import Dict, List, Optional, Sequence

from ..config.settings import DEFAULT_MAX_ENUM, DEFAULT_MAX_KERNEL
from ..models.code import GeneratorMatrix, LinearCode
from ..models.exceptions import EnumerationLimitError, InvariantViolation
from ..models.reports import AnalysisReport, SkippedAnalysis
from ..models.ring import RingParams
from ..utils.bounds import classify
from ..utils.duality import is_self_dual, is_self_orthogonal, rank_nullity_check
from ..utils.kernel import (
    image_has_self_dual_size, kernel_of_gray_image, predicts_nonlinear_image,
    predicts_self_orthogonal_image, self_orthogonal_image,
)
from ..utils.linear_code import code_from_lists, code_from_rows

logger = logging.getLogger(__name__)


class CodeAnalyzer:
    """Builds AnalysisReports, skipping analyses whose sweeps exceed the limits."""

    def __init__(self, max_enum: Optional[int] = DEFAULT_MAX_ENUM, max_kernel: Optional[int] = DEFAULT_MAX_KERNEL):
        self.max_enum = max_enum
        self.max_kernel = max_kernel
        self.stats = {
            'codes_analyzed': 0,
            'analyses_skipped': 0,
            'audits_passed': 0,
        }

    def _skip(self, report: AnalysisReport, analysis: str, error: EnumerationLimitError) -> None:
        logger.warning(f"Skipping {analysis}: {error}")
        report.skipped.append(SkippedAnalysis(
            analysis=analysis, reason='enumeration limit', size=error.size, limit=error.limit,
        ))
        self.stats['analyses_skipped'] += 1

    def analyze_matrix(self, matrix: GeneratorMatrix) -> AnalysisReport:
        return self.analyze(code_from_rows(matrix))

    def analyze(self, code: LinearCode) -> AnalysisReport:
        """
        Compute every statistic of ``code``.

        Args:
            code: The code to analyze

        Returns:
            AnalysisReport; fields of skipped analyses stay None

        Raises:
            InvariantViolation: A theorem-guaranteed property failed
        """
        ring = code.ring
        report = AnalysisReport(
            p=ring.p,
            s=ring.s,
            n=code.n,
            type=code.type.deltas,
            rank=code.rank,
            free_rank=code.free_rank,
            size=code.size,
            log_size=code.log_size,
            column_permutation=code.column_permutation,
            predicted_nonlinear_image=predicts_nonlinear_image(code.type, ring.p),
            predicted_self_orthogonal_image=predicts_self_orthogonal_image(code.type),
        )

        if not code.is_zero():
            try:
                bounds = classify(code, self.max_enum)
                report.d_lee = bounds.d_lee
                report.d_hamming = bounds.d_hamming
                report.witness = bounds.witness.entries
                report.is_mlds = bounds.is_mlds
                report.is_mldr = bounds.is_mldr
                report.mlds_slack = bounds.mlds_slack
                report.mldr_slack = bounds.mldr_slack
                report.hamming_singleton_slack = (code.n - code.log_size) - (bounds.d_hamming - 1)
                if report.hamming_singleton_slack < 0:
                    raise InvariantViolation(f"Singleton bound fails for {code}")
            except EnumerationLimitError as e:
                self._skip(report, 'bounds', e)

        report.is_self_orthogonal = is_self_orthogonal(code)
        report.is_self_dual = is_self_dual(code)
        report.rank_nullity = rank_nullity_check(code)
        if not report.rank_nullity.holds:
            raise InvariantViolation(f"rank(C) + free rank(C-perp) != n for {code}")

        try:
            kernel = kernel_of_gray_image(code, self.max_kernel)
            report.kernel_dim = kernel.dim_m
            report.kernel_allowed_dims = tuple(sorted(kernel.allowed_dims))
            report.image_linear = kernel.is_image_linear
        except EnumerationLimitError as e:
            self._skip(report, 'kernel', e)

        try:
            report.image_self_orthogonal = self_orthogonal_image(code, self.max_enum)
        except EnumerationLimitError as e:
            self._skip(report, 'image_self_orthogonal', e)

        self._check_image_predictions(code, report)
        self.stats['codes_analyzed'] += 1
        logger.debug(f"Analyzed {code}")
        return report

    @staticmethod
    def _check_image_predictions(code: LinearCode, report: AnalysisReport) -> None:
        if report.predicted_nonlinear_image and report.image_linear:
            raise InvariantViolation(f"{code} has type forcing a nonlinear image but its image is linear")
        if report.predicted_self_orthogonal_image and report.image_self_orthogonal is False:
            raise InvariantViolation(f"{code} has no free rows but its image is not self-orthogonal")
        ring = code.ring
        if report.is_self_dual and image_has_self_dual_size(code) and ring.s != 1 and (ring.p, ring.s) != (2, 2):
            raise InvariantViolation(f"self-dual {code} has an image of self-dual size outside Z_4")

    def audit(self, report: AnalysisReport, rows: Sequence[Sequence[int]]) -> AnalysisReport:
        """Re-analyze stored generator rows and require every field to match ``report``."""
        ring = RingParams(report.p, report.s)
        fresh = self.analyze(code_from_lists(ring, report.n, rows))
        stored, recomputed = report.to_dict(), fresh.to_dict()
        differing: List[str] = [key for key in stored if stored[key] != recomputed.get(key)]
        if differing:
            raise InvariantViolation(f"report does not reproduce; differing fields: {', '.join(differing)}")
        self.stats['audits_passed'] += 1
        return fresh

    def get_stats(self) -> Dict[str, int]:
        return dict(self.stats)
