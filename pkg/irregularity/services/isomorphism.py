"""
Isomorphism Service
Degree-sequence filter, joint colour refinement, then backtracking over
colour-compatible candidates. Adequate for desk-scale graphs (n <= 16).
"""
import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from irregularity.models.graph import Graph

logger = logging.getLogger(__name__)


def refine_colors(g1: Graph, g2: Graph) -> Tuple[List[int], List[int]]:
    """
    Refine degree colours of both graphs with one shared palette until the
    number of colour classes stops growing.
    """
    colors1 = g1.degrees()
    colors2 = g2.degrees()
    classes = len(set(colors1) | set(colors2))

    while True:
        signatures1 = [
            (colors1[u], tuple(sorted(colors1[w] for w in g1.neighbors(u)))) for u in g1.vertices()
        ]
        signatures2 = [
            (colors2[u], tuple(sorted(colors2[w] for w in g2.neighbors(u)))) for u in g2.vertices()
        ]
        palette = {sig: k for k, sig in enumerate(sorted(set(signatures1) | set(signatures2)))}
        refined1 = [palette[sig] for sig in signatures1]
        refined2 = [palette[sig] for sig in signatures2]

        if len(palette) == classes or Counter(refined1) != Counter(refined2):
            return refined1, refined2
        colors1, colors2, classes = refined1, refined2, len(palette)


class DegreeRefinementMatcher:
    """Backtracking search for an edge-preserving bijection g1 -> g2"""

    def __init__(self, g1: Graph, g2: Graph):
        self.g1 = g1
        self.g2 = g2
        self.mapping: Optional[Dict[int, int]] = None
        self.nodes_explored = 0

    def _search_order(self, colors: Sequence[int]) -> List[int]:
        """Rare colour classes first, then vertices with many already-placed neighbours"""
        frequency = Counter(colors)
        placed_neighbors = [0] * self.g1.order
        remaining = set(self.g1.vertices())
        order = []
        while remaining:
            u = min(
                remaining,
                key=lambda x: (-placed_neighbors[x], frequency[colors[x]], -self.g1.degree(x), x),
            )
            order.append(u)
            remaining.remove(u)
            for w in self.g1.neighbors(u):
                placed_neighbors[w] += 1
        return order

    def is_isomorphic(self) -> bool:
        g1, g2 = self.g1, self.g2
        if g1.order != g2.order or g1.size != g2.size:
            return False
        if sorted(g1.degrees()) != sorted(g2.degrees()):
            return False

        colors1, colors2 = refine_colors(g1, g2)
        if Counter(colors1) != Counter(colors2):
            return False

        candidates: Dict[int, List[int]] = {}
        for v in g2.vertices():
            candidates.setdefault(colors2[v], []).append(v)

        n = g1.order
        order = self._search_order(colors1)
        forward = [-1] * n
        inverse = [-1] * n

        def compatible(u: int, v: int) -> bool:
            mapped = 0
            for w in g1.neighbors(u):
                image = forward[w]
                if image != -1:
                    if not g2.has_edge(v, image):
                        return False
                    mapped += 1
            return mapped == sum(1 for x in g2.neighbors(v) if inverse[x] != -1)

        def extend(depth: int) -> bool:
            if depth == n:
                return True
            u = order[depth]
            for v in candidates[colors1[u]]:
                if inverse[v] != -1:
                    continue
                self.nodes_explored += 1
                if not compatible(u, v):
                    continue
                forward[u] = v
                inverse[v] = u
                if extend(depth + 1):
                    return True
                forward[u] = -1
                inverse[v] = -1
            return False

        if extend(0):
            self.mapping = {u: forward[u] for u in range(n)}
            return True
        logger.debug(f"No isomorphism after {self.nodes_explored} search nodes")
        return False


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """True iff an edge-preserving bijection between the vertex sets exists."""
    return DegreeRefinementMatcher(g1, g2).is_isomorphic()
