"""
Enumeration Commands
enumerate-trees, verify-trees, spectrum and the verify-all acceptance driver
"""
import time
from collections import Counter

import click

from irregularity.models.run_config import RunConfig
from irregularity.services.invariants import modified_albertson
from irregularity.utils.decorators import handle_command_errors
from irregularity.utils.graph6 import emit_graph6
from irregularity.views.common import emit, output_options, param_dict


@click.command('enumerate-trees')
@click.option('--n', 'n', required=True, type=int, help='Tree order.')
@click.option('--emit-graph6', 'emit_graph6_lines', is_flag=True, help='Print one graph6 line per tree instead of a summary.')
@output_options
@click.pass_obj
@handle_command_errors
def enumerate_trees(app, n, emit_graph6_lines, output_format):
    """Every free tree of order N, one per isomorphism class."""
    started = time.perf_counter()
    RunConfig('enumerate-trees', output_format=output_format, params=param_dict(n=n)).ensure_valid()
    trees = app.enumeration.enumerate_free_trees(n)

    if emit_graph6_lines:
        for tree in trees:
            click.echo(emit_graph6(tree))
        return

    values = Counter(modified_albertson(tree) for tree in trees)
    emit(
        {
            'n': n,
            'tree_count': sum(values.values()),
            'min_value': min(values),
            'max_value': max(values),
            'value_counts': {str(value): values[value] for value in sorted(values)},
        },
        output_format,
        started,
    )


@click.command('verify-trees')
@click.option('--n', 'n', required=True, type=int, help='Tree order, at least 5.')
@output_options
@click.pass_obj
@handle_command_errors
def verify_trees(app, n, output_format):
    """Exhaustive tree check: bound, equality class, path minimum, star maximum."""
    started = time.perf_counter()
    RunConfig('verify-trees', output_format=output_format, params=param_dict(n=n)).ensure_valid()
    report = app.enumeration.verify_trees(n)
    emit(report.to_dict(), output_format, started)
    if not report.passed:
        raise click.exceptions.Exit(1)


@click.command('spectrum')
@click.option('--n-max', 'n_max', required=True, type=int, help='Largest order swept.')
@click.option('--workers', default=None, type=int, help='Worker processes (default from profile).')
@output_options
@click.pass_obj
@handle_command_errors
def spectrum(app, n_max, workers, output_format):
    """A* values attained by all labeled connected graphs up to N_MAX vertices."""
    started = time.perf_counter()
    workers = app.config.DEFAULT_WORKERS if workers is None else workers
    RunConfig(
        'spectrum', output_format=output_format, workers=workers, params=param_dict(n_max=n_max),
    ).ensure_valid()
    report = app.enumeration.sweep_connected(n_max, workers)
    emit(report.to_dict(), output_format, started)
    if report.odd_values:
        raise click.exceptions.Exit(1)


@click.command('verify-all')
@click.option('--tree-n', default=12, show_default=True, type=int, help='Largest tree order checked.')
@click.option('--sweep-n', default=7, show_default=True, type=int, help='Largest order swept.')
@click.option('--seed', default=None, type=int, help='Seed of the randomized checks.')
@click.option('--workers', default=None, type=int, help='Worker processes for the sweep.')
@output_options
@click.pass_context
@handle_command_errors
def verify_all(ctx, tree_n, sweep_n, seed, workers, output_format):
    """Run the full acceptance suite; one PASS/FAIL row per check."""
    app = ctx.obj
    workers = app.config.DEFAULT_WORKERS if workers is None else workers
    RunConfig(
        'verify-all', output_format=output_format, workers=workers,
        params=param_dict(tree_n=tree_n, sweep_n=sweep_n, seed=seed),
    ).ensure_valid()

    results = app.verification_factory(workers=workers).run_all(tree_n, sweep_n, seed)
    timing = bool(ctx.meta.get('timing'))
    emit([result.to_dict(timing) for result in results], output_format)
    if not all(result.passed for result in results):
        raise click.exceptions.Exit(1)
