"""
Construction Commands
family and realize: explicit witnesses for A* values
"""
import time

import click

from irregularity.models.reports import FamilySpec, WitnessSet
from irregularity.models.run_config import RunConfig
from irregularity.services.families import construct_family, realize
from irregularity.services.invariants import modified_albertson
from irregularity.utils.decorators import handle_command_errors
from irregularity.utils.graph6 import emit_graph6
from irregularity.views.common import emit, output_options, param_dict, write_text


def witness_lines(witnesses: WitnessSet) -> str:
    """One annotated graph6 line per witness: g6, A*, order, recipe (tab separated)."""
    lines = []
    for graph, recipe in zip(witnesses.graphs, witnesses.provenance):
        lines.append(
            f"{emit_graph6(graph)}\tA*={modified_albertson(graph)}\tn={graph.order}\t{recipe}"
        )
    return '\n'.join(lines) + '\n'


@click.command('family')
@click.option('--i', 'i', required=True, type=int, help='Number of (3,3)-edge subdivisions.')
@click.option('--j', 'j', required=True, type=int, help='Base variant, 0..4.')
@click.option('--size', 'size', default=None, type=int, help='Prism cycle length of the base.')
@output_options
@handle_command_errors
def family(i, j, size, output_format):
    """Build the family member H(i, j) and check its closed form."""
    started = time.perf_counter()
    RunConfig('family', output_format=output_format, params=param_dict(i=i, j=j, size=size)).ensure_valid()
    spec = FamilySpec(i=i, j=j) if size is None else FamilySpec(i=i, j=j, base_size=size)
    graph = construct_family(spec)

    report = spec.to_dict()
    report.update({
        'modified': modified_albertson(graph),
        'order': graph.order,
        'size': graph.size,
        'graph6': emit_graph6(graph),
    })
    emit(report, output_format, started)


@click.command('realize')
@click.option('--target', required=True, type=int, help='Even A* value to realize.')
@click.option('--count', 'count', default=1, show_default=True, type=int,
              help='Number of witnesses of distinct order.')
@click.option('--out', 'out_path', default=None, type=click.Path(dir_okay=False),
              help='Write the witness lines here instead of standard output.')
@handle_command_errors
def realize_command(target, count, out_path):
    """Connected witnesses of pairwise distinct order with A* = TARGET."""
    RunConfig('realize', params=param_dict(target=target, count=count)).ensure_valid()
    text = witness_lines(realize(target, count))
    if out_path:
        write_text(out_path, text)
    else:
        click.echo(text, nl=False)
