"""
Shared Command Helpers
Graph input options, graph loading, output selection and report emission
"""
import functools
import logging
import time
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click

from irregularity.models.graph import Graph
from irregularity.models.run_config import RunConfig
from irregularity.utils.edgelist import emit_edge_list, parse_edge_list
from irregularity.utils.error_handler import GraphFormatError, InputOutputError
from irregularity.utils.graph6 import HEADER, emit_graph6, parse_graph6
from irregularity.views.render import Payload, render

logger = logging.getLogger(__name__)


def graph_input_options(func: Callable) -> Callable:
    """--graph6 STR | --input PATH [--format g6|edgelist]"""
    @click.option('--graph6', 'graph6', default=None, help='Inline graph6 string.')
    @click.option('--input', 'input_path', default=None, type=click.Path(dir_okay=False),
                  help='Graph file.')
    @click.option('--format', 'input_format', default='g6', type=click.Choice(['g6', 'edgelist']),
                  show_default=True, help='Format of --input.')
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def output_options(func: Callable) -> Callable:
    """--json | --csv | --table (default from the active profile)"""
    @click.option('--json', 'output_format', flag_value='json', help='JSON document.')
    @click.option('--csv', 'output_format', flag_value='csv', help='CSV rows.')
    @click.option('--table', 'output_format', flag_value='table', help='Aligned table.')
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        if kwargs.get('output_format') is None:
            kwargs['output_format'] = click.get_current_context().obj.config.DEFAULT_OUTPUT
        return func(*args, **kwargs)

    return wrapper


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding='ascii')
    except (OSError, UnicodeDecodeError) as e:
        raise InputOutputError(f"cannot read {path}: {e}")


def write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding='ascii')
    except OSError as e:
        raise InputOutputError(f"cannot write {path}: {e}")


def first_graph6_line(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if line and line != HEADER:
            return line
    raise GraphFormatError("graph6 file contains no graph")


def load_graph(run: RunConfig) -> Graph:
    """Decode the graph named by a validated RunConfig."""
    run.ensure_valid()
    if run.graph6 is not None:
        return parse_graph6(run.graph6)
    text = read_text(run.input_path)
    if run.input_format == 'edgelist':
        return parse_edge_list(text)
    return parse_graph6(first_graph6_line(text))


def encode_graph(graph: Graph, input_format: str) -> str:
    if input_format == 'edgelist':
        return emit_edge_list(graph)
    return emit_graph6(graph) + '\n'


def emit(payload: Payload, output_format: str, started: Optional[float] = None) -> None:
    """Echo a report; adds elapsed_seconds when --timing is active."""
    ctx = click.get_current_context()
    if ctx.meta.get('timing') and started is not None and isinstance(payload, dict):
        payload = dict(payload)
        payload['elapsed_seconds'] = round(time.perf_counter() - started, 3)
    click.echo(render(payload, output_format))


def param_dict(**params: Any) -> Dict[str, Any]:
    return {key: value for key, value in params.items() if value is not None}
