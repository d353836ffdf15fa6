"""
Family Service
Constructive witnesses for every admissible A* value: the H(i, j) families
built from cubic prisms, the 22-valued K_5 variant, and pendant-chain
growth that produces arbitrarily many non-isomorphic copies.
"""
import logging
from typing import Callable, Iterator, List, Optional, Tuple

from irregularity.models.graph import Graph, build_graph, make_named_graph, prism_edges
from irregularity.models.reports import FamilySpec, WitnessSet
from irregularity.services.invariants import modified_albertson
from irregularity.services.transforms import apply_transformation1, neutral_subdivide
from irregularity.utils.error_handler import InvariantViolation, UnsupportedValueError
from irregularity.utils.validators import validate_even_target, validate_positive_integer

logger = logging.getLogger(__name__)

# Even values below 16 that the constructions cannot reach
UNSUPPORTED_TARGETS = frozenset({2, 4, 12, 14})

# Residue of the target mod 10 -> base variant j (base values 32, 24, 16, 8)
VARIANT_BY_RESIDUE = {2: 1, 4: 2, 6: 3, 8: 4}

H_PRIME_VALUE = 22
PATH_VALUE = 6


def _with_pendants(order: int, edges: List[Tuple[int, int]], anchors: List[int]) -> Graph:
    """Attach one new pendant vertex to each anchor."""
    edges = list(edges)
    for k, anchor in enumerate(anchors):
        edges.append((anchor, order + k))
    return build_graph(order + len(anchors), edges)


def base_graph(j: int, s: int) -> Graph:
    """
    Base variant j on the prism of two s-cycles (outer 0..s-1, inner s..2s-1).

    j=0  the prism itself                                  (A* = 0)
    j=1  two disjoint rungs removed, pendants on all four
         freed endpoints                                   (A* = 32)
    j=2  vertex 0 removed, pendants on its three
         former neighbours                                 (A* = 24)
    j=3  one rung removed, pendants on both endpoints      (A* = 16)
    j=4  edge 0-1 subdivided by x, pendant on x            (A* = 8)
    """
    edges = prism_edges(s)
    order = 2 * s

    if j == 0:
        return build_graph(order, edges)

    if j == 1:
        r = s // 2
        removed = {(0, s), (r, s + r)}
        kept = [edge for edge in edges if edge not in removed]
        return _with_pendants(order, kept, [0, s, r, s + r])

    if j == 2:
        former = sorted({v for edge in edges if 0 in edge for v in edge if v != 0})
        kept = [(u - 1, v - 1) for u, v in edges if u != 0 and v != 0]
        return _with_pendants(order - 1, kept, [v - 1 for v in former])

    if j == 3:
        kept = [edge for edge in edges if edge != (0, s)]
        return _with_pendants(order, kept, [0, s])

    kept = [edge for edge in edges if edge != (0, 1)]
    x = order
    kept += [(0, x), (x, 1)]
    return _with_pendants(order + 1, kept, [x])


def first_cubic_edge(g: Graph) -> Optional[Tuple[int, int]]:
    """Lexicographically first edge with both endpoints of degree 3."""
    for u, v in g.edges():
        if g.degree(u) == 3 and g.degree(v) == 3:
            return u, v
    return None


def construct_family(spec: FamilySpec) -> Graph:
    """
    Build H(i, j): base variant j followed by i cubic-edge subdivisions.

    The result is checked against the closed form 10i (j = 0) or 2(5i - 4j + 20).
    """
    s = spec.effective_base_size
    graph = base_graph(spec.j, s)

    for step in range(spec.i):
        edge = first_cubic_edge(graph)
        if edge is None:
            raise InvariantViolation(f"{spec.recipe()} ran out of (3,3) edges at step {step}")
        graph = apply_transformation1(graph, *edge)

    value = modified_albertson(graph)
    if value != spec.predicted_value:
        raise InvariantViolation(
            f"{spec.recipe()} has A* = {value}, closed form predicts {spec.predicted_value}"
        )
    if not graph.is_connected():
        raise InvariantViolation(f"{spec.recipe()} is disconnected")

    logger.debug(f"Constructed {spec.recipe()}: n={graph.order}, A*={value}")
    return graph


def construct_h_prime() -> Graph:
    """K_5 with edge 0-1 subdivided by x = 5 and a pendant y = 6 on x; A* = 22."""
    k5 = make_named_graph('complete', 5)
    edges = [edge for edge in k5.edges() if edge != (0, 1)]
    edges += [(0, 5), (5, 1), (5, 6)]
    graph = build_graph(7, edges)

    value = modified_albertson(graph)
    if value != H_PRIME_VALUE:
        raise InvariantViolation(f"K_5 pendant variant has A* = {value}, expected 22")
    return graph


def pendant_edge(g: Graph) -> Optional[Tuple[int, int]]:
    """First (pendant, neighbour) pair whose neighbour has degree >= 2."""
    for y in g.vertices():
        if g.degree(y) == 1:
            x = g.neighbors(y)[0]
            if g.degree(x) >= 2:
                return y, x
    return None


def pendant_chain(seed: Graph) -> Iterator[Graph]:
    """seed, then successive neutral subdivisions of a pendant edge (order +1 each)."""
    graph = seed
    while True:
        yield graph
        edge = pendant_edge(graph)
        if edge is None:
            raise InvariantViolation("pendant chain needs a pendant edge to subdivide")
        graph = neutral_subdivide(graph, *edge)


def _chain_witnesses(witnesses: WitnessSet, seed: Graph, label: str, count: int) -> None:
    for extra, graph in enumerate(pendant_chain(seed)):
        if extra == count:
            break
        suffix = f" + {extra} neutral subdivision{'s' if extra != 1 else ''}" if extra else ''
        witnesses.add(graph, label + suffix)


def _family_sizes(i: int, j: int, count: int) -> List[FamilySpec]:
    first = FamilySpec(i=i, j=j).effective_base_size
    return [FamilySpec(i=i, j=j, base_size=first + step) for step in range(count)]


def realize(target: int, k: int) -> WitnessSet:
    """
    k connected graphs of pairwise distinct order, each with A* = target.

    Raises:
        ValidationError: target odd or negative, k < 1
        UnsupportedValueError: target in {2, 4, 12, 14}
    """
    target = validate_even_target(target)
    k = validate_positive_integer(k, 'count')
    if target in UNSUPPORTED_TARGETS:
        raise UnsupportedValueError(
            f"no construction is known for A* = {target}; constructive witnesses exist for "
            "2t with t in {0, 3, 4, 5} or t >= 8"
        )

    witnesses = WitnessSet(target=target)

    if target == 0:
        for size in range(3, 3 + k):
            witnesses.add(make_named_graph('cycle', size), f"cycle C_{size}")
    elif target == PATH_VALUE:
        for size in range(3, 3 + k):
            witnesses.add(make_named_graph('path', size), f"path P_{size}")
    elif target == H_PRIME_VALUE:
        _chain_witnesses(witnesses, construct_h_prime(), 'K_5 subdivided with pendant', k)
    elif target % 10 == 0:
        for spec in _family_sizes(target // 10, 0, k):
            witnesses.add(construct_family(spec), spec.recipe())
    else:
        j = VARIANT_BY_RESIDUE[target % 10]
        i = (target - (40 - 8 * j)) // 10
        if i < 0:
            raise UnsupportedValueError(f"no construction is known for A* = {target}")
        spec = FamilySpec(i=i, j=j)
        _chain_witnesses(witnesses, construct_family(spec), spec.recipe(), k)

    _check_witnesses(witnesses, modified_albertson)
    logger.info(f"Realized A* = {target} with orders {witnesses.orders()}")
    return witnesses


def _check_witnesses(witnesses: WitnessSet, measure: Callable[[Graph], int]) -> None:
    orders = witnesses.orders()
    if len(set(orders)) != len(orders):
        raise InvariantViolation(f"witness orders repeat: {orders}")
    for graph, recipe in zip(witnesses.graphs, witnesses.provenance):
        value = measure(graph)
        if value != witnesses.target or not graph.is_connected():
            raise InvariantViolation(
                f"witness {recipe} has A* = {value} (target {witnesses.target}), "
                f"connected={graph.is_connected()}"
            )
