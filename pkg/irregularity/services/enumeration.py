"""
Enumeration Service
Exhaustive engines: free trees via level sequences (constant amortized time
successor rule) and a labeled connected-graph sweep over edge bitmasks.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from config.base import get_config
from irregularity.models.graph import Graph, build_graph
from irregularity.models.reports import SpectrumReport, TreeReport
from irregularity.services.invariants import (
    classify_tree_equality,
    max_edge_term,
    modified_albertson,
    per_edge_terms,
    tree_lower_bound,
)
from irregularity.utils.decorators import log_function_call
from irregularity.utils.error_handler import ValidationError
from irregularity.utils.graph6 import emit_graph6
from irregularity.utils.validators import validate_positive_integer, validate_workers

Levels = List[int]

# Smallest order for which path and star are the unique extremal trees
EXTREMAL_TREE_MIN_ORDER = 5


# Free trees

def _split_levels(levels: Levels) -> Tuple[Levels, Levels]:
    """Left subtree of the root (re-leveled) and the tree with that subtree removed."""
    second_child = len(levels)
    seen_first = False
    for index, level in enumerate(levels):
        if level == 1:
            if seen_first:
                second_child = index
                break
            seen_first = True
    left = [level - 1 for level in levels[1:second_child]]
    rest = [0] + levels[second_child:]
    return left, rest


def _next_rooted_levels(levels: Levels, p: Optional[int] = None) -> Optional[Levels]:
    """Successor of a canonical rooted level sequence, or None after the star."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None

    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1

    result = list(levels)
    for index in range(p, len(result)):
        result[index] = result[index - p + q]
    return result


def _next_free_levels(candidate: Levels) -> Levels:
    """
    Accept a centre-rooted candidate, or jump to the next one. A candidate is
    centre-rooted when the left subtree is not higher than the rest, and on equal
    height not larger and not lexicographically later.
    """
    left, rest = _split_levels(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height

    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False

    if valid:
        return candidate

    p = len(left)
    jumped = _next_rooted_levels(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_levels(jumped)
        suffix = list(range(1, max(new_left) + 2))
        jumped[-len(suffix):] = suffix
    return jumped


def levels_to_graph(levels: Levels) -> Graph:
    """Tree whose preorder depth sequence is ``levels``; vertex k is the k-th visited."""
    edges = []
    stack: List[int] = []
    for index, level in enumerate(levels):
        while stack and levels[stack[-1]] >= level:
            stack.pop()
        if stack:
            edges.append((stack[-1], index))
        stack.append(index)
    return build_graph(len(levels), edges)


def free_tree_levels(n: int) -> Iterator[Levels]:
    """Level sequences of one representative per isomorphism class of n-vertex trees."""
    if n == 1:
        yield [0]
        return
    # Path rooted at its centre
    levels: Optional[Levels] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free_levels(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted_levels(levels)


# Bitmask sweep

def edge_pairs(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs in graph6 column order; bit k of a mask is pair k."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def mask_to_graph(n: int, mask: int) -> Graph:
    return build_graph(n, [pair for k, pair in enumerate(edge_pairs(n)) if (mask >> k) & 1])


def scan_mask_chunk(n: int, lo: int, hi: int) -> Tuple[Dict[int, int], int]:
    """
    Scan edge masks lo..hi-1 of n-vertex labeled graphs.

    Returns:
        (value -> smallest connected mask attaining it, number of connected masks)
    """
    pairs = edge_pairs(n)
    masks = np.arange(lo, hi, dtype=np.int64)
    width = hi - lo

    degrees = np.zeros((n, width), dtype=np.int64)
    rows = np.zeros((n, width), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        bit = (masks >> k) & 1
        degrees[i] += bit
        degrees[j] += bit
        rows[i] |= bit << j
        rows[j] |= bit << i

    # Reachable set from vertex 0, closed under adjacency
    reach = np.ones(width, dtype=np.int64)
    for _ in range(max(n - 1, 0)):
        expanded = reach.copy()
        for i in range(n):
            expanded |= np.where(((reach >> i) & 1).astype(bool), rows[i], 0)
        if np.array_equal(expanded, reach):
            break
        reach = expanded
    connected = reach == (1 << n) - 1

    squares = degrees * degrees
    values = np.zeros(width, dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        values += ((masks >> k) & 1) * np.abs(squares[i] - squares[j])

    hit_values = values[connected]
    hit_masks = masks[connected]
    unique, first = np.unique(hit_values, return_index=True)
    witnesses = {int(value): int(hit_masks[index]) for value, index in zip(unique, first)}
    return witnesses, int(connected.sum())


def _scan_args(args: Tuple[int, int, int]) -> Tuple[Dict[int, int], int]:
    return scan_mask_chunk(*args)


class EnumerationService:
    """Exhaustive tree and connected-graph campaigns"""

    def __init__(self, config=None):
        self.config = config or get_config('default')
        self.logger = logging.getLogger(__name__)

    def enumerate_free_trees(self, n: int) -> Iterator[Graph]:
        """
        One representative per isomorphism class of trees on n vertices.

        Args:
            n: Order, 1 <= n <= TREE_ORDER_CAP
        """
        n = validate_positive_integer(n, 'n')
        cap = self.config.TREE_ORDER_CAP
        if n > cap:
            raise ValidationError(f"free-tree enumeration is capped at n = {cap}, got {n}", 'n')
        return (levels_to_graph(levels) for levels in free_tree_levels(n))

    @log_function_call
    def verify_trees(self, n: int) -> TreeReport:
        """
        Check every free tree of order n: the maximum-degree lower bound and its
        equality class, parity, the edge-term cap of non-star trees, and uniqueness of
        the path minimum and star maximum.
        """
        n = validate_positive_integer(n, 'n')
        if n < EXTREMAL_TREE_MIN_ORDER:
            raise ValidationError(
                f"the path/star extremal characterisation holds for trees with n >= "
                f"{EXTREMAL_TREE_MIN_ORDER}, got n = {n}",
                'n',
            )

        report = TreeReport(n=n)
        term_cap = max_edge_term(n)
        min_witness: Optional[Graph] = None
        max_witness: Optional[Graph] = None

        for tree in self.enumerate_free_trees(n):
            report.tree_count += 1
            value = modified_albertson(tree)
            delta = tree.max_degree
            bound = tree_lower_bound(delta)

            if value % 2:
                report.odd_values.append(value)
            if value < bound:
                report.bound_violations.append(emit_graph6(tree))
            if (value == bound) != classify_tree_equality(tree):
                report.equality_mismatches.append(emit_graph6(tree))
            # Without a vertex of degree n - 1 every term stays below the star's
            if delta < n - 1 and any(term >= term_cap for _, _, term in per_edge_terms(tree)):
                report.term_bound_violations.append(emit_graph6(tree))

            if report.min_value is None or value < report.min_value:
                report.min_value, report.min_witnesses, min_witness = value, 1, tree
            elif value == report.min_value:
                report.min_witnesses += 1

            if report.max_value is None or value > report.max_value:
                report.max_value, report.max_witnesses, max_witness = value, 1, tree
            elif value == report.max_value:
                report.max_witnesses += 1

        report.min_witness_is_path = min_witness is not None and min_witness.max_degree <= 2
        report.max_witness_is_star = max_witness is not None and max_witness.max_degree == n - 1

        if report.bound_violations or report.equality_mismatches or report.term_bound_violations:
            self.logger.warning(
                f"n={n}: {len(report.bound_violations)} bound violations, "
                f"{len(report.equality_mismatches)} equality mismatches, "
                f"{len(report.term_bound_violations)} edge-term violations"
            )
        self.logger.info(
            f"n={n}: {report.tree_count} trees, A* in [{report.min_value}, {report.max_value}]"
        )
        return report

    @log_function_call
    def sweep_connected(self, n_max: int, workers: int = 1) -> SpectrumReport:
        """
        A* values of every labeled connected graph with 1..n_max vertices.

        The mask range of each order is cut into contiguous chunks; chunk results
        are merged in chunk order, so the report does not depend on ``workers``.
        """
        n_max = validate_positive_integer(n_max, 'n_max')
        workers = validate_workers(workers)
        cap = self.config.SWEEP_ORDER_CAP
        if n_max > cap:
            raise ValidationError(f"connected-graph sweep is capped at n = {cap}, got {n_max}", 'n_max')

        chunk = 1 << self.config.SWEEP_CHUNK_BITS
        report = SpectrumReport(n=n_max)
        first_mask: Dict[int, Tuple[int, int]] = {}

        executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
        try:
            for n in range(1, n_max + 1):
                total = 1 << len(edge_pairs(n))
                tasks = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
                if executor is None:
                    results = map(_scan_args, tasks)
                else:
                    results = executor.map(_scan_args, tasks)

                order_values = set()
                for witnesses, connected in results:
                    report.connected_graphs += connected
                    for value, mask in witnesses.items():
                        order_values.add(value)
                        if value not in first_mask:
                            first_mask[value] = (n, mask)

                report.masks_scanned += total
                report.per_order[n] = sorted(order_values)
                self.logger.info(f"order {n}: {total} masks, values {report.per_order[n]}")
        finally:
            if executor is not None:
                executor.shutdown()

        attained = sorted(first_mask)
        report.attained = attained
        report.odd_values = [value for value in attained if value % 2]
        top = attained[-1] if attained else 0
        report.gap_values = [value for value in range(0, top + 1, 2) if value not in first_mask]
        report.first_witness = {
            value: emit_graph6(mask_to_graph(n, mask)) for value, (n, mask) in first_mask.items()
        }
        return report
