"""
Test suite for CodeAnalyzer.
"""

import json
from fractions import Fraction
from unittest.mock import patch

import pytest

from src.models.exceptions import InvariantViolation
from src.models.reports import AnalysisReport
from src.models.ring import RingParams
from src.processors.code_analyzer import CodeAnalyzer
from src.utils.linear_code import ambient_code, code_from_lists


class TestCodeAnalyzer:
    """Test cases for CodeAnalyzer."""

    def setup_method(self):
        """Set up test fixtures."""
        self.analyzer = CodeAnalyzer()
        self.z9 = RingParams(3, 2)

    def test_three_over_z9(self, z9_three):
        report = self.analyzer.analyze(z9_three)
        assert report.type == (0, 1)
        assert (report.rank, report.free_rank, report.size) == (1, 0, 3)
        assert report.log_size == Fraction(1, 2)
        assert report.d_lee == 3
        assert report.d_hamming == 1
        assert report.is_mldr
        assert not report.is_mlds
        assert report.mlds_slack == Fraction(1, 2)
        assert report.mldr_slack == 0
        assert report.hamming_singleton_slack == Fraction(1, 2)
        assert report.is_self_dual
        assert report.is_self_orthogonal
        assert report.rank_nullity.holds
        assert report.kernel_dim == 1
        assert report.kernel_allowed_dims == (1,)
        assert report.image_linear
        assert report.image_self_orthogonal
        assert report.predicted_self_orthogonal_image
        assert not report.predicted_nonlinear_image
        assert report.skipped == []

    def test_ambient_over_z9(self, z9_ambient):
        report = self.analyzer.analyze(z9_ambient)
        assert report.is_mlds
        assert report.witness == (1,)
        assert report.kernel_dim == 1
        assert report.kernel_allowed_dims == (1, 2)
        assert report.predicted_nonlinear_image
        assert report.image_linear is False
        assert report.image_self_orthogonal is False

    def test_zero_code(self, z9_zero):
        report = self.analyzer.analyze(z9_zero)
        assert report.d_lee is None
        assert report.d_hamming is None
        assert report.witness is None
        assert report.is_mlds is None
        assert report.kernel_dim == 0
        assert report.is_self_orthogonal
        assert not report.is_self_dual

    def test_z4_two(self):
        report = self.analyzer.analyze(code_from_lists(RingParams(2, 2), 1, [[2]]))
        assert report.is_self_dual
        assert report.image_linear
        assert report.image_self_orthogonal

    def test_analyze_matrix(self, z9_pair):
        report = self.analyzer.analyze_matrix(z9_pair.standard_form)
        assert report.d_lee == 3

    def test_limits_skip_analyses(self):
        analyzer = CodeAnalyzer(max_enum=10, max_kernel=10)
        report = analyzer.analyze(ambient_code(self.z9, 2))
        assert [s.analysis for s in report.skipped] == ['bounds', 'kernel', 'image_self_orthogonal']
        assert all(s.reason == 'enumeration limit' and s.size == 81 and s.limit == 10 for s in report.skipped)
        assert report.d_lee is None
        assert report.kernel_dim is None
        assert report.rank_nullity.holds
        assert analyzer.get_stats()['analyses_skipped'] == 3

    def test_stats(self, z9_three, z9_pair):
        self.analyzer.analyze(z9_three)
        self.analyzer.analyze(z9_pair)
        assert self.analyzer.get_stats()['codes_analyzed'] == 2

    def test_prediction_conflict_raises(self, z9_ambient):
        with patch('src.processors.code_analyzer.predicts_nonlinear_image', return_value=True), \
             patch('src.processors.code_analyzer.kernel_of_gray_image') as mock_kernel:
            mock_kernel.return_value.dim_m = 1
            mock_kernel.return_value.allowed_dims = frozenset({1})
            mock_kernel.return_value.is_image_linear = True
            with pytest.raises(InvariantViolation):
                self.analyzer.analyze(z9_ambient)


class TestReportSerialization:
    """Test cases for report JSON and audits."""

    def setup_method(self):
        self.analyzer = CodeAnalyzer()

    def test_key_order(self, z9_three):
        keys = list(self.analyzer.analyze(z9_three).to_dict())
        assert keys[:8] == ['ring', 'n', 'type', 'rank', 'free_rank', 'size', 'log_size', 'column_permutation']
        assert keys[-1] == 'skipped'

    def test_rationals_encoded(self, z9_three):
        data = self.analyzer.analyze(z9_three).to_dict()
        assert data['log_size'] == {'num': 1, 'den': 2}
        assert data['mlds_slack'] == {'num': 1, 'den': 2}

    def test_json_round_trip(self, z9_pair):
        report = self.analyzer.analyze(z9_pair)
        restored = AnalysisReport.from_dict(json.loads(json.dumps(report.to_dict())))
        assert restored == report

    def test_zero_code_nulls(self, z9_zero):
        data = self.analyzer.analyze(z9_zero).to_dict()
        assert data['d_lee'] is None
        assert data['mlds_slack'] is None
        assert data['witness'] is None

    def test_audit_reproduces(self, z9_three):
        report = self.analyzer.analyze(z9_three)
        self.analyzer.audit(report, [[3]])
        assert self.analyzer.get_stats()['audits_passed'] == 1

    def test_audit_detects_tampering(self, z9_three):
        report = self.analyzer.analyze(z9_three)
        report.d_lee = 2
        with pytest.raises(InvariantViolation) as info:
            self.analyzer.audit(report, [[3]])
        assert 'd_lee' in str(info.value)


def test_corpus_reports_audit_clean(corpus):
    """Every corpus code analyzes without an invariant failure and reproduces from its rows."""
    analyzer = CodeAnalyzer()
    for code in corpus[::7]:
        report = analyzer.analyze(code)
        analyzer.audit(report, [list(row.entries) for row in code.rows])
    assert analyzer.get_stats()['audits_passed'] == len(corpus[::7])
