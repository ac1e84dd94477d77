#!/usr/bin/env python3
"""
zps-codes - analyze linear codes over Z_{p^s} under the extended Lee weight.

Commands: analyze, gray, weight, dual, kernel, search.
Exit codes: 0 done (possibly with skipped analyses), 1 usage or input error,
2 a theoretically guaranteed property failed.
"""

import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import click
from rich.console import Console
from rich.table import Table

from src.config.settings import (
    DEFAULT_MAX_ENUM, DEFAULT_MAX_KERNEL, DEFAULT_SEARCH_BUDGET, DEFAULT_SEARCH_SEED,
    JSON_INDENT, LOGGING_CONFIG, RESULTS_FILENAME, SEARCH_TARGETS,
)
from src.models.code import CodeType, LinearCode
from src.models.exceptions import InvariantViolation, ZpsCodesError
from src.models.reports import AnalysisReport, SearchSpec, encode_value
from src.processors.code_analyzer import CodeAnalyzer
from src.processors.search_harness import count_by_target, run_search, write_records
from src.utils.duality import dual_code, rank_nullity_check
from src.utils.gray_map import GrayConvention, gray_scalar
from src.utils.kernel import kernel_of_gray_image
from src.utils.lee_metric import complete_weight, hamming_weight, lee_weight_vec
from src.utils.linear_code import code_from_rows, permuted_standard_form
from src.utils.matrix_io import format_matrix, parse_matrix_file
from src.utils.zps_ring import make_ring

console = Console()
logger = logging.getLogger('zps_codes')


def setup_logging(verbose: bool = False):
    """Configure logging for the application."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, LOGGING_CONFIG['level']),
        format=LOGGING_CONFIG['format'],
        force=True,
    )


def load_code(file_path: str) -> LinearCode:
    text = Path(file_path).read_text(encoding='utf-8')
    return code_from_rows(parse_matrix_file(text))


def emit_json(data) -> None:
    click.echo(json.dumps(data, indent=JSON_INDENT))


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


def print_report(report: AnalysisReport, code: LinearCode) -> None:
    table = Table(title=f"{code}")
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    for field in ('type', 'rank', 'free_rank', 'size', 'log_size', 'column_permutation',
                  'd_lee', 'd_hamming', 'witness', 'is_mlds', 'is_mldr', 'mlds_slack',
                  'mldr_slack', 'hamming_singleton_slack', 'is_self_dual', 'is_self_orthogonal',
                  'kernel_dim', 'kernel_allowed_dims', 'image_linear', 'image_self_orthogonal',
                  'predicted_nonlinear_image', 'predicted_self_orthogonal_image'):
        table.add_row(field, _fmt(getattr(report, field)))
    if report.rank_nullity:
        rn = report.rank_nullity
        table.add_row('rank_nullity', f"{rn.rank} + {rn.dual_free_rank} = {rn.n}: {rn.holds}")
    console.print(table)

    if code.rows:
        console.print("Standard form, columns permuted:")
        for row in permuted_standard_form(code):
            console.print("  " + " ".join(str(x) for x in row))
    for skip in report.skipped:
        console.print(f"[yellow]skipped {skip.analysis}: {skip.reason} (size {skip.size} > {skip.limit})[/yellow]")


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable debug logging')
@click.pass_context
def cli(ctx, verbose):
    """Linear codes over Z_{p^s}: Gray map, Lee-weight Singleton bounds, kernels and duality."""
    setup_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON')
@click.option('--max-enum', type=int, default=DEFAULT_MAX_ENUM, show_default=True, help='Codeword enumeration limit')
@click.option('--max-kernel', type=int, default=DEFAULT_MAX_KERNEL, show_default=True, help='Kernel computation limit')
def analyze(file, as_json, max_enum, max_kernel):
    """Full analysis report of the code generated by FILE."""
    code = load_code(file)
    logger.info(f"Analyzing {code}")
    report = CodeAnalyzer(max_enum, max_kernel).analyze(code)
    if as_json:
        emit_json(report.to_dict())
    else:
        print_report(report, code)


@cli.command()
@click.option('--p', 'p', type=int, required=True, help='Prime p')
@click.option('--s', 's', type=int, required=True, help='Exponent s')
@click.option('--trailing', is_flag=True, help='Put the increments at the end of each block')
@click.argument('values', nargs=-1, type=int, required=True)
def gray(p, s, trailing, values):
    """Gray images of scalars, one 'x -> (digits)' line each."""
    ring = make_ring(p, s)
    convention = GrayConvention.TRAILING if trailing else GrayConvention.LEADING
    for x in values:
        if not 0 <= x < ring.modulus:
            logger.warning(f"Reducing {x} mod {ring.modulus}")
        residue = ring.residue(x)
        click.echo(f"{residue.value} -> ({gray_scalar(residue, convention).digits()})")


@cli.command()
@click.option('--p', 'p', type=int, required=True, help='Prime p')
@click.option('--s', 's', type=int, required=True, help='Exponent s')
@click.option('--json', 'as_json', is_flag=True, help='Print as JSON')
@click.argument('values', nargs=-1, type=int, required=True)
def weight(p, s, as_json, values):
    """Lee, Hamming and complete weight of the vector VALUES."""
    ring = make_ring(p, s)
    v = ring.vector(values)
    result = {
        'vector': list(v.entries),
        'lee': lee_weight_vec(v),
        'hamming': hamming_weight(v.entries),
        'complete': {str(r): c for r, c in sorted(complete_weight(v).items())},
    }
    if as_json:
        emit_json(result)
        return
    table = Table(title=f"{v} over {ring}")
    table.add_column("Weight", style="cyan")
    table.add_column("Value")
    table.add_row("lee", str(result['lee']))
    table.add_row("hamming", str(result['hamming']))
    table.add_row("complete", ", ".join(f"n_{r}={c}" for r, c in result['complete'].items()))
    console.print(table)


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--json', 'as_json', is_flag=True, help='Print as JSON')
def dual(file, as_json):
    """Dual code of FILE as a matrix file, with the rank identity."""
    code = load_code(file)
    dual_c = dual_code(code)
    check = rank_nullity_check(code)
    if not check.holds:
        raise InvariantViolation(f"rank(C) + free rank(C-perp) != n for {code}")
    if as_json:
        emit_json({
            'type': list(dual_c.type.deltas),
            'rank': dual_c.rank,
            'free_rank': dual_c.free_rank,
            'size': dual_c.size,
            'rows': dual_c.standard_form.as_lists(),
            'rank_nullity': check.to_dict(),
        })
        return
    console.print(f"Dual of {code}: {dual_c}")
    console.print(f"rank(C) + free rank(C-perp) = {check.rank} + {check.dual_free_rank} = {check.n}")
    click.echo(format_matrix(dual_c.standard_form), nl=False)


@cli.command()
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('--json', 'as_json', is_flag=True, help='Print as JSON')
@click.option('--max-kernel', type=int, default=DEFAULT_MAX_KERNEL, show_default=True, help='Kernel computation limit')
def kernel(file, as_json, max_kernel):
    """Kernel of the Gray image of FILE."""
    code = load_code(file)
    result = kernel_of_gray_image(code, max_kernel)
    summary = {
        'dim_m': result.dim_m,
        'allowed_dims': sorted(result.allowed_dims),
        'image_size': result.image_size,
        'kernel_size': len(result.kernel_images),
        'image_linear': result.is_image_linear,
        'lower_type': list(result.lower_code.type.deltas),
        'upper_type': list(result.upper_code.type.deltas),
        'kernel_preimages': encode_value(result.kernel_preimages),
    }
    if as_json:
        emit_json(summary)
        return
    table = Table(title=f"Kernel of phi({code})")
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    for key, value in summary.items():
        if key != 'kernel_preimages':
            table.add_row(key, _fmt(value))
    console.print(table)
    for word in summary['kernel_preimages']:
        console.print("  " + _fmt(word))


def _parse_type(value: Optional[str]) -> Optional[CodeType]:
    if not value:
        return None
    try:
        return CodeType(tuple(int(x) for x in value.split(',')))
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated non-negative integers, got {value!r}: {e}")


@cli.command()
@click.option('--p', 'p', type=int, required=True, help='Prime p')
@click.option('--s', 's', type=int, required=True, help='Exponent s')
@click.option('--n', 'n', type=int, required=True, help='Code length')
@click.option('--exhaustive/--random', default=False, help='Sweep all n x n matrices or draw random codes')
@click.option('--budget', type=int, default=DEFAULT_SEARCH_BUDGET, show_default=True, help='Maximum candidates')
@click.option('--seed', type=int, default=DEFAULT_SEARCH_SEED, show_default=True, help='Random seed')
@click.option('--target', 'targets', type=click.Choice(SEARCH_TARGETS), multiple=True,
              help='Target property (repeatable; default: all)')
@click.option('--type', 'type_spec', default=None, help='Type constraint d0,d1,...')
@click.option('--out', type=click.Path(dir_okay=False), default=RESULTS_FILENAME, show_default=True,
              help='NDJSON results file')
@click.option('--max-enum', type=int, default=DEFAULT_MAX_ENUM, show_default=True, help='Codeword enumeration limit')
@click.option('--max-kernel', type=int, default=DEFAULT_MAX_KERNEL, show_default=True, help='Kernel computation limit')
def search(p, s, n, exhaustive, budget, seed, targets, type_spec, out, max_enum, max_kernel):
    """Search small codes for MLDS, MLDR, self-dual and image properties."""
    spec = SearchSpec(
        ring=make_ring(p, s),
        n=n,
        mode='exhaustive' if exhaustive else 'random',
        budget=budget,
        seed=seed,
        targets=frozenset(targets or SEARCH_TARGETS),
        type_constraint=_parse_type(type_spec),
    )
    records = run_search(spec, CodeAnalyzer(max_enum, max_kernel))
    write_records(records, Path(out))

    table = Table(title=f"Search over {spec.ring}, n={n} ({spec.mode})")
    table.add_column("Target", style="cyan")
    table.add_column("Records", justify="right")
    for target, count in count_by_target(records, spec.targets).items():
        table.add_row(target, str(count))
    console.print(table)
    console.print(f"{len(records)} records written to {out}")


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and map failures onto exit codes."""
    try:
        result = cli.main(args=argv, prog_name='zps-codes', standalone_mode=False)
    except InvariantViolation as e:
        logger.error(f"Invariant violated: {e}")
        return 2
    except ZpsCodesError as e:
        logger.error(str(e))
        return 1
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())
