"""
Graph Model
Simple undirected graph on dense vertex ids 0..n-1 and its named constructors
"""
import logging
from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from irregularity.utils.error_handler import PreconditionError, ValidationError
from irregularity.utils.validators import validate_non_negative_integer, validate_vertex

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

NAMED_GRAPH_MINIMUM = {
    'path': 1,
    'star': 1,
    'cycle': 3,
    'complete': 3,
    'prism': 3,
}


@dataclass(frozen=True)
class DegreeProfile:
    """Degree sequence with its extremes"""

    degrees: Tuple[int, ...]
    max_degree: int
    min_degree: int

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)


class Graph:
    """
    Simple undirected graph.

    Each vertex keeps a sorted neighbour list; membership tests use binary search.
    The only mutators are add_vertex, add_edge and remove_edge.
    """

    __slots__ = ('_adjacency', '_size', 'duplicates_dropped')

    def __init__(self, order: int = 0):
        order = validate_non_negative_integer(order, 'order')
        self._adjacency: List[List[int]] = [[] for _ in range(order)]
        self._size = 0
        self.duplicates_dropped = 0

    # Basic accessors

    @property
    def order(self) -> int:
        return len(self._adjacency)

    @property
    def size(self) -> int:
        """Edge count m"""
        return self._size

    def vertices(self) -> range:
        return range(len(self._adjacency))

    def neighbors(self, u: int) -> Sequence[int]:
        """Sorted neighbour ids of u (read-only view by convention)"""
        return self._adjacency[u]

    def degree(self, u: int) -> int:
        return len(self._adjacency[u])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self._adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adjacency[u]
        k = bisect_left(nbrs, v)
        return k < len(nbrs) and nbrs[k] == v

    def edges(self) -> Iterator[Edge]:
        """Edges as (u, v) with u < v, in lexicographic order"""
        for u, nbrs in enumerate(self._adjacency):
            for v in nbrs[bisect_left(nbrs, u + 1):]:
                yield u, v

    def degree_profile(self) -> DegreeProfile:
        degrees = tuple(self.degrees())
        if not degrees:
            return DegreeProfile(degrees, 0, 0)
        return DegreeProfile(degrees, max(degrees), min(degrees))

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    # Mutators

    def add_vertex(self) -> int:
        """Append an isolated vertex and return its id n"""
        self._adjacency.append([])
        return len(self._adjacency) - 1

    def add_edge(self, u: int, v: int) -> None:
        """Insert edge uv; uv must be absent"""
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise PreconditionError(f"edge ({u}, {v}) is already present")
        insort(self._adjacency[u], v)
        insort(self._adjacency[v], u)
        self._size += 1

    def remove_edge(self, u: int, v: int) -> None:
        """Delete edge uv; uv must be present"""
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise PreconditionError(f"edge ({u}, {v}) is not present")
        self._adjacency[u].pop(bisect_left(self._adjacency[u], v))
        self._adjacency[v].pop(bisect_left(self._adjacency[v], u))
        self._size -= 1

    def _check_pair(self, u: int, v: int) -> None:
        validate_vertex(self.order, u, 'u')
        validate_vertex(self.order, v, 'v')
        if u == v:
            raise ValidationError(f"self-loop at vertex {u} is not allowed", 'edge')

    # Derived graphs

    def copy(self) -> 'Graph':
        clone = Graph(0)
        clone._adjacency = [list(nbrs) for nbrs in self._adjacency]
        clone._size = self._size
        return clone

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Graph with vertex u renamed to permutation[u]"""
        if sorted(permutation) != list(range(self.order)):
            raise ValidationError("permutation must be a rearrangement of 0..n-1", 'permutation')
        return build_graph(self.order, ((permutation[u], permutation[v]) for u, v in self.edges()))

    # Predicates

    def connected_components(self) -> List[List[int]]:
        """Vertex sets of the connected components, each sorted, ordered by smallest id"""
        seen = [False] * self.order
        components = []
        for start in self.vertices():
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            component = [start]
            while queue:
                u = queue.popleft()
                for w in self._adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        component.append(w)
                        queue.append(w)
            components.append(sorted(component))
        return components

    def is_connected(self) -> bool:
        """Every vertex reachable from vertex 0 (vacuously true for n <= 1)"""
        if self.order <= 1:
            return True
        seen = [False] * self.order
        seen[0] = True
        queue = deque([0])
        reached = 1
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    queue.append(w)
        return reached == self.order

    def is_tree(self) -> bool:
        return self.order >= 1 and self._size == self.order - 1 and self.is_connected()

    # Dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    __hash__ = None

    def __repr__(self) -> str:
        return f"<Graph(n={self.order}, m={self._size})>"


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a graph from an edge list.

    Args:
        n: Vertex count
        edges: Unordered pairs with ids in 0..n-1

    Returns:
        Graph with exactly the given edges; duplicate pairs are dropped and counted
        in ``duplicates_dropped``
    """
    graph = Graph(n)
    for pair in edges:
        u, v = pair
        graph._check_pair(u, v)
        if graph.has_edge(u, v):
            graph.duplicates_dropped += 1
            continue
        insort(graph._adjacency[u], v)
        insort(graph._adjacency[v], u)
        graph._size += 1

    if graph.duplicates_dropped:
        logger.warning(f"Dropped {graph.duplicates_dropped} duplicate edge(s) while building graph")
    return graph


def make_named_graph(kind: str, size: int) -> Graph:
    """
    Build P_size, S_size, C_size, K_size or the prism on two size-cycles.

    Args:
        kind: One of path, star, cycle, complete, prism
        size: Order parameter (the prism has 2*size vertices)
    """
    if kind not in NAMED_GRAPH_MINIMUM:
        raise ValidationError(
            f"unknown graph kind {kind!r}; expected one of {', '.join(NAMED_GRAPH_MINIMUM)}", 'kind'
        )
    size = validate_non_negative_integer(size, 'size')
    minimum = NAMED_GRAPH_MINIMUM[kind]
    if size < minimum:
        raise ValidationError(f"{kind} requires size >= {minimum}, got {size}", 'size')

    if kind == 'path':
        return build_graph(size, ((k, k + 1) for k in range(size - 1)))
    if kind == 'star':
        return build_graph(size, ((0, k) for k in range(1, size)))
    if kind == 'cycle':
        return build_graph(size, ((k, (k + 1) % size) for k in range(size)))
    if kind == 'complete':
        return build_graph(size, ((u, v) for u in range(size) for v in range(u + 1, size)))
    return build_graph(2 * size, prism_edges(size))


def prism_edges(s: int) -> List[Edge]:
    """Edges of the circular ladder: outer cycle 0..s-1, inner cycle s..2s-1, rungs k--s+k"""
    outer = [(k, (k + 1) % s) for k in range(s)]
    inner = [(s + k, s + (k + 1) % s) for k in range(s)]
    rungs = [(k, s + k) for k in range(s)]
    return outer + inner + rungs


def spider(legs: Sequence[int]) -> Graph:
    """Tree with a centre 0 and one path of the given length per leg"""
    if any(length < 1 for length in legs):
        raise ValidationError("every leg length must be at least 1", 'legs')
    edges = []
    next_id = 1
    for length in legs:
        previous = 0
        for _ in range(length):
            edges.append((previous, next_id))
            previous = next_id
            next_id += 1
    return build_graph(next_id, edges)


def double_star(a: int, b: int) -> Graph:
    """Adjacent centres 0 and 1 carrying a and b leaves"""
    edges = [(0, 1)]
    edges += [(0, 2 + k) for k in range(a)]
    edges += [(1, 2 + a + k) for k in range(b)]
    return build_graph(2 + a + b, edges)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Second graph's ids are shifted by first.order"""
    shift = first.order
    edges = list(first.edges()) + [(u + shift, v + shift) for u, v in second.edges()]
    return build_graph(first.order + second.order, edges)


def subdivided(graph: Graph, u: int, v: int) -> Graph:
    """Copy of graph with edge uv replaced by u--x--v, x = n"""
    graph._check_pair(u, v)
    if not graph.has_edge(u, v):
        raise PreconditionError(f"cannot subdivide ({u}, {v}): not an edge")
    result = graph.copy()
    result.remove_edge(u, v)
    x = result.add_vertex()
    result.add_edge(u, x)
    result.add_edge(x, v)
    return result


def is_connected(g: Graph) -> bool:
    return g.is_connected()


def is_tree(g: Graph) -> bool:
    return g.is_tree()
