"""
Test suite for the zps-codes command line.
"""

import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

import main
from src.models.exceptions import InvariantViolation
from src.processors.search_harness import read_records


@pytest.fixture(autouse=True)
def quiet_logging():
    """Leave pytest's log capture in place instead of reconfiguring the root logger."""
    with patch('main.setup_logging'):
        yield


@pytest.fixture
def runner():
    return CliRunner()


class TestGrayCommand:
    """Test cases for the gray command."""

    def test_z9_table(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['gray', '--p', '3', '--s', '2'] + [str(x) for x in range(9)])
        assert result.exit_code == 0
        assert result.stdout == (fixtures_dir / "gray_z9.txt").read_text()

    def test_z4_trailing(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['gray', '--p', '2', '--s', '2', '--trailing', '0', '1', '2', '3'])
        assert result.stdout == (fixtures_dir / "gray_z4.txt").read_text()

    def test_values_reduced(self, runner):
        result = runner.invoke(main.cli, ['gray', '--p', '3', '--s', '2', '13'])
        assert result.stdout == "4 -> (211)\n"

    def test_non_prime(self):
        assert main.main(['gray', '--p', '6', '--s', '1', '1']) == 1


class TestAnalyzeCommand:
    """Test cases for the analyze command."""

    def test_three_json(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['analyze', str(fixtures_dir / "three_z9.txt"), '--json'])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data['ring'] == {'p': 3, 's': 2}
        assert data['is_mldr'] is True
        assert data['is_mlds'] is False
        assert data['is_self_dual'] is True
        assert data['kernel_dim'] == 1
        assert data['log_size'] == {'num': 1, 'den': 2}

    def test_zero_code_json(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['analyze', str(fixtures_dir / "zero_z9.txt"), '--json'])
        data = json.loads(result.stdout)
        assert data['d_lee'] is None
        assert data['is_mlds'] is None
        assert data['kernel_dim'] == 0

    def test_limits_reported(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['analyze', str(fixtures_dir / "pair_z9.txt"), '--json',
                                          '--max-enum', '4', '--max-kernel', '4'])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert {s['analysis'] for s in data['skipped']} == {'bounds', 'kernel', 'image_self_orthogonal'}

    def test_table_output(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['analyze', str(fixtures_dir / "pair_z9.txt")])
        assert result.exit_code == 0
        assert 'd_lee' in result.stdout
        assert 'Standard form' in result.stdout

    def test_exit_codes(self, fixtures_dir, tmp_path):
        assert main.main(['analyze', str(fixtures_dir / "three_z9.txt"), '--json']) == 0
        assert main.main(['analyze', str(tmp_path / "missing.txt")]) == 1
        bad = tmp_path / "bad.txt"
        bad.write_text("3 2 1\n1\n")
        assert main.main(['analyze', str(bad)]) == 1

    def test_invariant_violation_exit_code(self, fixtures_dir):
        with patch('main.CodeAnalyzer.analyze', side_effect=InvariantViolation("kernel not closed")):
            assert main.main(['analyze', str(fixtures_dir / "three_z9.txt")]) == 2


class TestOtherCommands:
    """Test cases for weight, dual and kernel."""

    def test_weight_json(self, runner):
        result = runner.invoke(main.cli, ['weight', '--p', '3', '--s', '2', '--json', '4', '7', '0'])
        data = json.loads(result.stdout)
        assert data['lee'] == 5
        assert data['hamming'] == 2
        assert data['complete'] == {'0': 1, '4': 1, '7': 1}

    def test_dual_matrix(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['dual', str(fixtures_dir / "three_z9.txt")])
        assert result.exit_code == 0
        assert result.stdout.endswith("3 2 1 1\n3\n")

    def test_dual_json(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['dual', str(fixtures_dir / "ambient_z9.txt"), '--json'])
        data = json.loads(result.stdout)
        assert data['size'] == 1
        assert data['rank_nullity'] == {'rank': 1, 'dual_free_rank': 0, 'n': 1, 'holds': True}

    def test_kernel_json(self, runner, fixtures_dir):
        result = runner.invoke(main.cli, ['kernel', str(fixtures_dir / "ambient_z9.txt"), '--json'])
        data = json.loads(result.stdout)
        assert data['dim_m'] == 1
        assert data['allowed_dims'] == [1, 2]
        assert data['kernel_preimages'] == [[0], [3], [6]]
        assert data['image_linear'] is False

    def test_kernel_limit(self, fixtures_dir):
        assert main.main(['kernel', str(fixtures_dir / "pair_z9.txt"), '--max-kernel', '2']) == 1


class TestSearchCommand:
    """Test cases for the search command."""

    def test_exhaustive_search(self, tmp_path):
        out = tmp_path / "results.ndjson"
        code = main.main(['search', '--p', '3', '--s', '2', '--n', '1', '--exhaustive', '--budget', '9',
                          '--target', 'mlds', '--target', 'self-dual', '--out', str(out)])
        assert code == 0
        records = read_records(out)
        assert [r['index'] for r in records] == [1, 3]
        assert records[1]['verdicts'] == {'mlds': False, 'self-dual': True}

    def test_same_seed_same_file(self, tmp_path):
        args = ['search', '--p', '2', '--s', '3', '--n', '2', '--budget', '25', '--seed', '17']
        main.main(args + ['--out', str(tmp_path / "a.ndjson")])
        main.main(args + ['--out', str(tmp_path / "b.ndjson")])
        assert (tmp_path / "a.ndjson").read_bytes() == (tmp_path / "b.ndjson").read_bytes()

    def test_bad_arguments(self, tmp_path):
        out = str(tmp_path / "r.ndjson")
        assert main.main(['search', '--p', '3', '--s', '2', '--n', '1', '--budget', '0', '--out', out]) == 1
        assert main.main(['search', '--p', '3', '--s', '2', '--n', '1', '--type', '1,x', '--out', out]) == 1
        assert main.main(['search', '--p', '3', '--s', '2', '--n', '1', '--type', '2,0', '--out', out]) == 1
        assert main.main(['search', '--p', '3', '--s', '2', '--n', '1', '--target', 'mds', '--out', out]) == 1
