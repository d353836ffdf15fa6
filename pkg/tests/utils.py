"""
Test Utilities Module
Brute-force oracles and networkx conversions used across the suites
"""
import heapq
import itertools
from typing import Iterator, Sequence

import networkx as nx

from irregularity.models.graph import Graph, build_graph


def tree_from_pruefer(sequence: Sequence[int], n: int) -> Graph:
    """Labeled tree on 0..n-1 encoded by a Prüfer sequence of length n-2."""
    degree = [1] * n
    for label in sequence:
        degree[label] += 1

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for label in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, label))
        degree[label] -= 1
        if degree[label] == 1:
            heapq.heappush(leaves, label)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def labeled_trees_from_pruefer(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n >= 2 vertices."""
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(sequence, n)


def brute_force_modified(g: Graph) -> int:
    """A* by scanning every vertex pair."""
    total = 0
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.has_edge(u, v):
                total += abs(g.degree(u) ** 2 - g.degree(v) ** 2)
    return total


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.order))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Relabel nodes in sorted order to 0..n-1."""
    index = {node: k for k, node in enumerate(sorted(graph.nodes()))}
    return build_graph(len(index), ((index[u], index[v]) for u, v in graph.edges()))
