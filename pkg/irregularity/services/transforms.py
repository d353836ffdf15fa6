"""
Transformation Service
Edge subdivision and the two subdivisions with a known effect on A*
"""
import logging

from irregularity.models.graph import Graph, subdivided
from irregularity.services.invariants import modified_albertson
from irregularity.utils.error_handler import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)

CUBIC_SUBDIVISION_INCREMENT = 10


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by the path u--x--v through a new vertex x = n."""
    return subdivided(g, u, v)


def is_cubic_edge(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v) and g.degree(u) == 3 and g.degree(v) == 3


def is_neutral_edge(g: Graph, u: int, v: int) -> bool:
    """Edge with a degree-2 endpoint, or a pendant endpoint whose partner has degree >= 2."""
    if not g.has_edge(u, v):
        return False
    du, dv = g.degree(u), g.degree(v)
    pendant = (du == 1 and dv >= 2) or (dv == 1 and du >= 2)
    return pendant or du == 2 or dv == 2


def apply_transformation1(g: Graph, u: int, v: int) -> Graph:
    """
    Subdivide an edge whose endpoints both have degree 3; A* grows by exactly 10.

    Raises:
        PreconditionError: uv is not an edge or an endpoint degree differs from 3
    """
    result = subdivide_edge(g, u, v)
    if g.degree(u) != 3 or g.degree(v) != 3:
        raise PreconditionError(
            f"cubic-edge subdivision requires both endpoints of degree 3; "
            f"d({u}) = {g.degree(u)}, d({v}) = {g.degree(v)}"
        )

    before = modified_albertson(g)
    after = modified_albertson(result)
    if after - before != CUBIC_SUBDIVISION_INCREMENT:
        raise InvariantViolation(
            f"cubic-edge subdivision changed A* by {after - before} instead of 10"
        )
    return result


def neutral_subdivide(g: Graph, u: int, v: int) -> Graph:
    """
    Subdivide an edge that has a degree-2 endpoint, or a pendant endpoint whose
    other endpoint has degree >= 2; A* is unchanged.

    Raises:
        PreconditionError: neither degree condition holds
    """
    result = subdivide_edge(g, u, v)
    if not is_neutral_edge(g, u, v):
        raise PreconditionError(
            "neutral subdivision requires an endpoint of degree 2 or a pendant edge whose "
            f"other endpoint has degree >= 2; d({u}) = {g.degree(u)}, d({v}) = {g.degree(v)}"
        )

    before = modified_albertson(g)
    after = modified_albertson(result)
    if after != before:
        raise InvariantViolation(f"neutral subdivision changed A* from {before} to {after}")
    return result
