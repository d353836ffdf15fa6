"""
Invariant Service
Exact integer imbalance, Albertson index A, modified Albertson index A*,
neighbour partitions and the closed-form tree bounds
"""
import logging
from typing import List

from irregularity.models.graph import Graph
from irregularity.models.reports import EdgeTerm, InvariantReport, NeighborPartition
from irregularity.utils.error_handler import InvariantViolation, PreconditionError, ValidationError
from irregularity.utils.validators import validate_non_negative_integer, validate_vertex

logger = logging.getLogger(__name__)


def edge_imbalance(g: Graph, u: int, v: int) -> int:
    """imb(uv) = |d_u - d_v| for an edge uv."""
    validate_vertex(g.order, u, 'u')
    validate_vertex(g.order, v, 'v')
    if u == v or not g.has_edge(u, v):
        raise ValidationError(f"({u}, {v}) is not an edge of the graph", 'edge')
    return abs(g.degree(u) - g.degree(v))


def albertson(g: Graph) -> int:
    """A(G): sum of edge imbalances."""
    degrees = g.degrees()
    return sum(abs(degrees[u] - degrees[v]) for u, v in g.edges())


def per_edge_terms(g: Graph) -> List[EdgeTerm]:
    """(u, v, |d_u^2 - d_v^2|) for every edge, u < v."""
    squares = [d * d for d in g.degrees()]
    return [(u, v, abs(squares[u] - squares[v])) for u, v in g.edges()]


def modified_albertson(g: Graph) -> int:
    """
    A*(G) = sum over edges of |d_u^2 - d_v^2|.

    The value is always even; an odd result means the graph storage is corrupt
    and raises InvariantViolation.
    """
    squares = [d * d for d in g.degrees()]
    total = 0
    for u in g.vertices():
        su = squares[u]
        for v in g.neighbors(u):
            if v > u:
                total += abs(su - squares[v])
    if total & 1:
        raise InvariantViolation(f"A* evaluated to the odd value {total} on {g!r}")
    return total


def invariant_report(g: Graph, per_edge: bool = False) -> InvariantReport:
    """Collect A, A* and Δ; the per-edge terms are materialised only on request."""
    if per_edge:
        terms = tuple(per_edge_terms(g))
        modified = sum(term for _, _, term in terms)
        if modified & 1:
            raise InvariantViolation(f"A* evaluated to the odd value {modified} on {g!r}")
    else:
        terms = None
        modified = modified_albertson(g)
    return InvariantReport(
        albertson=albertson(g),
        modified=modified,
        max_degree=g.max_degree,
        per_edge_terms=terms,
    )


def neighbor_partition(g: Graph, u: int) -> NeighborPartition:
    """Counts of neighbours of u with smaller, equal and larger degree."""
    validate_vertex(g.order, u, 'u')
    du = g.degree(u)
    lower = equal = greater = 0
    for w in g.neighbors(u):
        dw = g.degree(w)
        if dw < du:
            lower += 1
        elif dw == du:
            equal += 1
        else:
            greater += 1
    return NeighborPartition(lower, equal, greater)


def is_componentwise_regular(g: Graph) -> bool:
    """True iff every connected component is regular."""
    degrees = g.degrees()
    return all(
        len({degrees[u] for u in component}) == 1 for component in g.connected_components()
    )


def tree_lower_bound(delta: int) -> int:
    """Δ(Δ² − 1); zero for Δ ∈ {0, 1}."""
    delta = validate_non_negative_integer(delta, 'delta')
    return delta * (delta * delta - 1) if delta >= 1 else 0


def star_value(n: int) -> int:
    """A*(S_n) = (n − 1)((n − 1)² − 1)."""
    n = validate_non_negative_integer(n, 'n')
    return tree_lower_bound(n - 1) if n >= 1 else 0


def max_edge_term(n: int) -> int:
    """Largest possible edge term in an n-vertex graph: (n − 1)² − 1."""
    n = validate_non_negative_integer(n, 'n')
    return max((n - 1) ** 2 - 1, 0)


def classify_tree_equality(t: Graph) -> bool:
    """
    True iff the tree is a path or has exactly one vertex of degree >= 3,
    the class on which A*(T) meets the maximum-degree bound.

    Raises:
        PreconditionError: t is not a tree
        InvariantViolation: t is in the class but misses the bound
    """
    if not t.is_tree():
        raise PreconditionError("equality classification requires a tree")
    branch_vertices = sum(1 for d in t.degrees() if d >= 3)
    if branch_vertices > 1:
        return False

    value, bound = modified_albertson(t), tree_lower_bound(t.max_degree)
    if value != bound:
        raise InvariantViolation(
            f"tree in the equality class has A* = {value}, expected the bound {bound}"
        )
    return True
