"""
Graph Commands
compute, delta and transform: single-graph operations
"""
import time

import click

from irregularity.models.run_config import RunConfig
from irregularity.services.dynamic_update import edge_addition_delta
from irregularity.services.invariants import invariant_report, modified_albertson
from irregularity.services.transforms import apply_transformation1, neutral_subdivide
from irregularity.utils.decorators import handle_command_errors
from irregularity.utils.error_handler import InvariantViolation
from irregularity.utils.graph6 import emit_graph6
from irregularity.views.common import (
    emit,
    encode_graph,
    graph_input_options,
    load_graph,
    output_options,
    param_dict,
    write_text,
)

TRANSFORMS = {
    't1': apply_transformation1,
    'neutral': neutral_subdivide,
}


@click.command('compute')
@graph_input_options
@click.option('--per-edge', is_flag=True, help='Include the (u, v, |du^2 - dv^2|) terms.')
@output_options
@handle_command_errors
def compute(graph6, input_path, input_format, per_edge, output_format):
    """A(G), A*(G) and the maximum degree of the input graph."""
    started = time.perf_counter()
    run = RunConfig('compute', graph6, input_path, input_format, output_format, needs_graph=True)
    graph = load_graph(run)
    emit(invariant_report(graph, per_edge=per_edge).to_dict(), output_format, started)


@click.command('delta')
@graph_input_options
@click.option('--u', 'u', required=True, type=int, help='First endpoint.')
@click.option('--v', 'v', required=True, type=int, help='Second endpoint.')
@output_options
@click.pass_obj
@handle_command_errors
def delta(app, graph6, input_path, input_format, u, v, output_format):
    """Change of A* caused by inserting the absent edge uv."""
    started = time.perf_counter()
    run = RunConfig(
        'delta', graph6, input_path, input_format, output_format,
        params=param_dict(u=u, v=v), needs_graph=True,
    )
    graph = load_graph(run)
    change = edge_addition_delta(graph, u, v)
    before = modified_albertson(graph)
    if app.config.DEBUG:
        grown = graph.copy()
        grown.add_edge(u, v)
        if modified_albertson(grown) != before + change:
            raise InvariantViolation(f"insertion delta {change} disagrees with recomputation")
    emit(
        {'u': u, 'v': v, 'delta': change, 'before': before, 'after': before + change},
        output_format,
        started,
    )


@click.command('transform')
@graph_input_options
@click.option('--kind', required=True, type=click.Choice(sorted(TRANSFORMS)),
              help='t1: subdivide a (3,3) edge; neutral: A*-preserving subdivision.')
@click.option('--u', 'u', required=True, type=int, help='First endpoint.')
@click.option('--v', 'v', required=True, type=int, help='Second endpoint.')
@click.option('--out', 'out_path', default=None, type=click.Path(dir_okay=False),
              help='Write the transformed graph here, in the input format.')
@output_options
@handle_command_errors
def transform(graph6, input_path, input_format, kind, u, v, out_path, output_format):
    """Subdivide edge uv and report A* before and after."""
    started = time.perf_counter()
    run = RunConfig(
        'transform', graph6, input_path, input_format, output_format,
        params=param_dict(u=u, v=v), needs_graph=True,
    )
    graph = load_graph(run)
    result = TRANSFORMS[kind](graph, u, v)

    report = {
        'kind': kind,
        'u': u,
        'v': v,
        'before': modified_albertson(graph),
        'after': modified_albertson(result),
        'order': result.order,
        'size': result.size,
        'graph6': emit_graph6(result),
    }
    if out_path:
        write_text(out_path, encode_graph(result, input_format))
        report['out'] = out_path
    emit(report, output_format, started)
