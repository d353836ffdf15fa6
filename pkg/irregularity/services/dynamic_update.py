"""
Dynamic Update Service
Incremental maintenance of A* under edge insertion and deletion.

For non-adjacent u, v labelled so that d_u >= d_v:

    A*(G + uv) - A*(G) = 3 d_u (d_u + 1) + d_v (d_v - 1)
                         - 2 [(2 d_u + 1) g_u + (2 d_v + 1) g_v]

where g_x counts neighbours of x with degree strictly larger than d_x.
Only N(u) and N(v) are scanned, so an update costs O(d_u + d_v).
"""
import logging
from typing import Tuple

from irregularity.models.graph import Graph
from irregularity.models.running_index import RunningIndex
from irregularity.services.invariants import modified_albertson
from irregularity.utils.error_handler import InvariantViolation, PreconditionError
from irregularity.utils.validators import validate_vertex

logger = logging.getLogger(__name__)


def _check_pair(g: Graph, u: int, v: int) -> None:
    validate_vertex(g.order, u, 'u')
    validate_vertex(g.order, v, 'v')
    if u == v:
        raise PreconditionError(f"edge insertion needs two distinct vertices, got u = v = {u}")


def _insertion_delta(g: Graph, u: int, v: int) -> Tuple[int, int]:
    """Delta of inserting the absent edge uv, and the neighbour inspections spent."""
    du, dv = g.degree(u), g.degree(v)
    if du < dv:
        u, v, du, dv = v, u, dv, du

    greater_u = 0
    for w in g.neighbors(u):
        if g.degree(w) > du:
            greater_u += 1
    greater_v = 0
    for w in g.neighbors(v):
        if g.degree(w) > dv:
            greater_v += 1

    delta = (
        3 * du * (du + 1)
        + dv * (dv - 1)
        - 2 * ((2 * du + 1) * greater_u + (2 * dv + 1) * greater_v)
    )
    return delta, du + dv


def edge_addition_delta(g: Graph, u: int, v: int) -> int:
    """
    A*(G + uv) - A*(G) for non-adjacent distinct u, v (argument order is free).

    Raises:
        PreconditionError: u = v or uv already an edge
    """
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        raise PreconditionError(f"edge insertion needs non-adjacent vertices; ({u}, {v}) is an edge")
    delta, _ = _insertion_delta(g, u, v)
    return delta


def track(g: Graph, check: bool = False) -> RunningIndex:
    """Start incremental tracking on a private copy of g."""
    return RunningIndex(graph=g.copy(), current=modified_albertson(g), check=check)


def _after_update(ri: RunningIndex, work: int) -> RunningIndex:
    ri.work_counter += work
    ri.updates += 1
    if ri.current & 1:
        raise InvariantViolation(f"tracked A* became odd ({ri.current}) after update {ri.updates}")
    if ri.check:
        expected = modified_albertson(ri.graph)
        if expected != ri.current:
            raise InvariantViolation(
                f"tracked A* {ri.current} differs from recomputed {expected} after update {ri.updates}"
            )
    return ri


def insert_edge_tracked(ri: RunningIndex, u: int, v: int) -> RunningIndex:
    """Insert uv and shift the cached value by the pre-insertion delta."""
    _check_pair(ri.graph, u, v)
    if ri.graph.has_edge(u, v):
        raise PreconditionError(f"edge insertion needs non-adjacent vertices; ({u}, {v}) is an edge")

    delta, work = _insertion_delta(ri.graph, u, v)
    ri.graph.add_edge(u, v)
    ri.current += delta
    logger.debug(f"insert ({u}, {v}): delta={delta} current={ri.current}")
    return _after_update(ri, work)


def delete_edge_tracked(ri: RunningIndex, u: int, v: int) -> RunningIndex:
    """
    Delete uv. The value drops by the delta that re-inserting uv into G - uv
    would produce, evaluated on G - uv.
    """
    _check_pair(ri.graph, u, v)
    if not ri.graph.has_edge(u, v):
        raise PreconditionError(f"edge deletion needs an existing edge; ({u}, {v}) is absent")

    ri.graph.remove_edge(u, v)
    delta, work = _insertion_delta(ri.graph, u, v)
    ri.current -= delta
    logger.debug(f"delete ({u}, {v}): delta={-delta} current={ri.current}")
    return _after_update(ri, work)
