"""
Verification Service
Seeded acceptance campaign: exhaustive sweeps, randomized identity checks and
constructive realizability, one PASS/FAIL result per check.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from config.base import get_config
from irregularity.models.graph import Graph, build_graph, make_named_graph
from irregularity.models.reports import FamilySpec
from irregularity.services.dynamic_update import (
    delete_edge_tracked,
    edge_addition_delta,
    insert_edge_tracked,
    track,
)
from irregularity.services.enumeration import EnumerationService, edge_pairs, mask_to_graph
from irregularity.services.families import construct_family, realize
from irregularity.services.invariants import (
    classify_tree_equality,
    modified_albertson,
    star_value,
    tree_lower_bound,
)
from irregularity.services.isomorphism import are_isomorphic
from irregularity.services.transforms import (
    apply_transformation1,
    is_cubic_edge,
    is_neutral_edge,
    neutral_subdivide,
    subdivide_edge,
)
from irregularity.utils.graph6 import emit_graph6, parse_graph6

REQUIRED_SPECTRUM_VALUES = (0, 6, 8, 10, 16, 18, 20, 22, 24)
EXCLUDED_SPECTRUM_VALUES = (2, 4, 12, 14)
ORDER_FOUR_SPECTRUM = (0, 6, 18, 20, 24)
REALIZABLE_HALVES = (0, 3, 4, 5) + tuple(range(8, 61))


@dataclass
class CheckResult:
    """Outcome of one acceptance check"""

    name: str
    passed: bool
    detail: str
    elapsed: float = 0.0
    failures: List[str] = field(default_factory=list)

    def to_dict(self, timing: bool = False) -> Dict[str, object]:
        result: Dict[str, object] = {
            'check': self.name,
            'status': 'PASS' if self.passed else 'FAIL',
            'detail': self.detail,
        }
        if self.failures:
            result['failures'] = list(self.failures[:20])
        if timing:
            result['elapsed_seconds'] = round(self.elapsed, 3)
        return result


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi graph G(n, p) drawn from ``rng``."""
    if n < 2:
        return Graph(n)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    rows, cols = np.nonzero(upper)
    return build_graph(n, zip(rows.tolist(), cols.tolist()))


def random_non_edge(g: Graph, rng: np.random.Generator, attempts: int = 64) -> Optional[tuple]:
    """Uniform-ish non-adjacent pair; None when g is complete."""
    n = g.order
    if n < 2 or g.size == n * (n - 1) // 2:
        return None
    for _ in range(attempts):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        if not g.has_edge(u, v):
            return u, v
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    return missing[int(rng.integers(len(missing)))]


def random_edge(g: Graph, rng: np.random.Generator) -> Optional[tuple]:
    if g.size == 0:
        return None
    candidates = [u for u in g.vertices() if g.degree(u)]
    u = candidates[int(rng.integers(len(candidates)))]
    nbrs = g.neighbors(u)
    return u, nbrs[int(rng.integers(len(nbrs)))]


def random_near_cubic(rng: np.random.Generator) -> Graph:
    """Prism with a few random subdivisions and pendants hung on degree-2 vertices."""
    graph = make_named_graph('prism', int(rng.integers(3, 13)))
    for _ in range(int(rng.integers(0, 4))):
        graph = subdivide_edge(graph, *random_edge(graph, rng))
    for x in [x for x in graph.vertices() if graph.degree(x) == 2]:
        if rng.random() < 0.5:
            y = graph.add_vertex()
            graph.add_edge(x, y)
    return graph


class VerificationService:
    """Runs every acceptance check with a fixed seed"""

    def __init__(
        self,
        config=None,
        delta_cases: int = 10_000,
        transform_cases: int = 1_000,
        stream_order: int = 1_000,
        stream_updates: int = 10_000,
        stream_checkpoints: int = 100,
        realize_max_half: int = 60,
        workers: int = 1,
    ):
        self.config = config or get_config('default')
        self.logger = logging.getLogger(__name__)
        self.enumeration = EnumerationService(self.config)
        self.delta_cases = delta_cases
        self.transform_cases = transform_cases
        self.stream_order = stream_order
        self.stream_updates = stream_updates
        self.stream_checkpoints = stream_checkpoints
        self.realize_max_half = realize_max_half
        self.workers = workers
        self._realized: List[Graph] = []

    def _timed(self, name: str, check: Callable[[], CheckResult]) -> CheckResult:
        self.logger.info(f"Running check {name}")
        start = time.perf_counter()
        result = check()
        result.elapsed = time.perf_counter() - start
        level = logging.INFO if result.passed else logging.ERROR
        self.logger.log(level, f"{name}: {'PASS' if result.passed else 'FAIL'} ({result.detail})")
        return result

    def run_all(self, tree_n: int = 12, sweep_n: int = 7, seed: Optional[int] = None) -> List[CheckResult]:
        seed = self.config.DEFAULT_SEED if seed is None else seed
        rng = np.random.default_rng(seed)
        spectrum = self.enumeration.sweep_connected(sweep_n, self.workers)

        return [
            self._timed('parity', lambda: self.check_parity(spectrum)),
            self._timed('tree-extremals', lambda: self.check_tree_extremals(tree_n)),
            self._timed('tree-lower-bound', lambda: self.check_tree_lower_bound(tree_n)),
            self._timed('insertion-delta', lambda: self.check_insertion_delta(rng)),
            self._timed('transformation-laws', lambda: self.check_transformation_laws(rng)),
            self._timed('family-closed-form', self.check_family_closed_form),
            self._timed('realizability', self.check_realizability),
            self._timed('spectrum-gaps', lambda: self.check_spectrum_gaps(spectrum)),
            self._timed('incremental-stream', lambda: self.check_incremental_stream(rng)),
            self._timed('graph6-codec', self.check_codec),
        ]

    def check_parity(self, spectrum) -> CheckResult:
        return CheckResult(
            'parity',
            not spectrum.odd_values,
            f"{spectrum.connected_graphs} connected labeled graphs up to n={spectrum.n}, "
            f"odd values {spectrum.odd_values}",
        )

    def check_tree_extremals(self, tree_n: int) -> CheckResult:
        failures = []
        for n in range(5, tree_n + 1):
            report = self.enumeration.verify_trees(n)
            if not report.passed or report.min_value != 6 or report.max_value != star_value(n):
                failures.append(f"n={n}: {report.to_dict()}")
        return CheckResult(
            'tree-extremals', not failures,
            f"orders 5..{tree_n}: minimum 6 only at the path, maximum (n-1)((n-1)^2-1) only at the star",
            failures=failures,
        )

    def check_tree_lower_bound(self, tree_n: int) -> CheckResult:
        failures = []
        trees = 0
        for n in range(1, tree_n + 1):
            for tree in self.enumeration.enumerate_free_trees(n):
                trees += 1
                value = modified_albertson(tree)
                bound = tree_lower_bound(tree.max_degree)
                if value < bound or (value == bound) != classify_tree_equality(tree):
                    failures.append(emit_graph6(tree))
        return CheckResult(
            'tree-lower-bound', not failures,
            f"{trees} trees with n <= {tree_n}, {len(failures)} bound or equality failures",
            failures=failures,
        )

    def check_insertion_delta(self, rng: np.random.Generator) -> CheckResult:
        failures = []
        for _ in range(self.delta_cases):
            n = int(rng.integers(2, 65))
            graph = random_graph(n, float(rng.random()), rng)
            pair = random_non_edge(graph, rng)
            if pair is None:
                continue
            delta = edge_addition_delta(graph, *pair)
            grown = graph.copy()
            grown.add_edge(*pair)
            expected = modified_albertson(grown) - modified_albertson(graph)
            if delta != expected or delta % 2:
                failures.append(f"{emit_graph6(graph)} {pair}: {delta} vs {expected}")
        return CheckResult(
            'insertion-delta', not failures,
            f"{self.delta_cases} random (graph, non-adjacent pair) cases",
            failures=failures,
        )

    def check_transformation_laws(self, rng: np.random.Generator) -> CheckResult:
        failures = []
        for _ in range(self.transform_cases):
            graph = random_near_cubic(rng)
            cubic = [edge for edge in graph.edges() if is_cubic_edge(graph, *edge)]
            edge = cubic[int(rng.integers(len(cubic)))]
            change = modified_albertson(apply_transformation1(graph, *edge)) - modified_albertson(graph)
            if change != 10:
                failures.append(f"cubic {emit_graph6(graph)} {edge}: {change}")

        for _ in range(self.transform_cases):
            graph = random_graph(int(rng.integers(3, 16)), float(rng.uniform(0.2, 0.7)), rng)
            neutral = [edge for edge in graph.edges() if is_neutral_edge(graph, *edge)]
            if not neutral:
                hub = int(rng.integers(graph.order))
                leaf = graph.add_vertex()
                graph.add_edge(hub, leaf)
                neutral = [edge for edge in graph.edges() if is_neutral_edge(graph, *edge)]
                if not neutral:
                    continue
            edge = neutral[int(rng.integers(len(neutral)))]
            change = modified_albertson(neutral_subdivide(graph, *edge)) - modified_albertson(graph)
            if change != 0:
                failures.append(f"neutral {emit_graph6(graph)} {edge}: {change}")
        return CheckResult(
            'transformation-laws', not failures,
            f"{self.transform_cases} cubic-edge (+10) and {self.transform_cases} neutral (+0) subdivisions",
            failures=failures,
        )

    def check_family_closed_form(self) -> CheckResult:
        failures = []
        for i in range(21):
            for j in range(5):
                spec = FamilySpec(i=i, j=j)
                value = modified_albertson(construct_family(spec))
                if value != spec.predicted_value:
                    failures.append(f"{spec.recipe()}: {value} != {spec.predicted_value}")
        bases = [modified_albertson(construct_family(FamilySpec(i=0, j=j))) for j in range(1, 5)]
        if bases != [32, 24, 16, 8]:
            failures.append(f"base values {bases}")
        return CheckResult(
            'family-closed-form', not failures,
            f"i = 0..20, j = 0..4; base values {bases}", failures=failures,
        )

    def check_realizability(self) -> CheckResult:
        failures = []
        self._realized = []
        limit = self.config.ISOMORPHISM_CHECK_MAX_ORDER
        halves = [t for t in REALIZABLE_HALVES if t <= self.realize_max_half]
        for t in halves:
            witnesses = realize(2 * t, 5)
            graphs = witnesses.graphs
            self._realized.extend(graphs)
            if len(graphs) != 5 or len(set(witnesses.orders())) != 5:
                failures.append(f"A*={2 * t}: orders {witnesses.orders()}")
            for graph in graphs:
                if not graph.is_connected() or modified_albertson(graph) != 2 * t:
                    failures.append(f"A*={2 * t}: bad witness {emit_graph6(graph)}")
            small = [graph for graph in graphs if graph.order <= limit]
            for a in range(len(small)):
                for b in range(a + 1, len(small)):
                    if are_isomorphic(small[a], small[b]):
                        failures.append(f"A*={2 * t}: isomorphic witnesses")
        path = modified_albertson(make_named_graph('path', 3))
        return CheckResult(
            'realizability', not failures and path == 6,
            f"targets 2t for t in {{0,3,4,5}} and 8..{self.realize_max_half}, five witnesses each",
            failures=failures,
        )

    def check_spectrum_gaps(self, spectrum) -> CheckResult:
        attained = set(spectrum.attained)
        failures = []
        if attained & set(EXCLUDED_SPECTRUM_VALUES):
            failures.append(f"excluded values attained: {sorted(attained & set(EXCLUDED_SPECTRUM_VALUES))}")
        if spectrum.n >= 7 and not set(REQUIRED_SPECTRUM_VALUES) <= attained:
            failures.append(f"missing values: {sorted(set(REQUIRED_SPECTRUM_VALUES) - attained)}")
        if spectrum.n >= 4:
            low = sorted(set().union(*(spectrum.per_order[n] for n in range(1, 5))))
            if low != list(ORDER_FOUR_SPECTRUM):
                failures.append(f"orders <= 4 attain {low}")
        return CheckResult(
            'spectrum-gaps', not failures,
            f"empirical, n <= {spectrum.n}: gaps {spectrum.gap_values[:8]}", failures=failures,
        )

    def check_incremental_stream(self, rng: np.random.Generator) -> CheckResult:
        failures = []
        n = self.stream_order
        ri = track(random_graph(n, 10.0 / n, rng), check=self.config.DEBUG)
        slack = self.config.WORK_SLACK
        every = max(self.stream_updates // max(self.stream_checkpoints, 1), 1)

        for step in range(1, self.stream_updates + 1):
            insert = rng.random() < 0.5 or ri.graph.size == 0
            pair = random_non_edge(ri.graph, rng) if insert else random_edge(ri.graph, rng)
            if pair is None:
                insert = not insert
                pair = random_non_edge(ri.graph, rng) if insert else random_edge(ri.graph, rng)
            u, v = pair
            budget = ri.graph.degree(u) + ri.graph.degree(v) + slack
            before = ri.work_counter
            if insert:
                insert_edge_tracked(ri, u, v)
            else:
                delete_edge_tracked(ri, u, v)
            spent = ri.work_counter - before
            if spent > budget:
                failures.append(f"step {step}: work {spent} > {budget}")
            if step % every == 0:
                expected = modified_albertson(ri.graph)
                if expected != ri.current:
                    failures.append(f"step {step}: tracked {ri.current} != recomputed {expected}")
        return CheckResult(
            'incremental-stream', not failures,
            f"{self.stream_updates} updates on n={n}, {self.stream_checkpoints} checkpoints, "
            f"mean work {ri.work_counter / max(ri.updates, 1):.1f} vs 2m = {2 * ri.graph.size}",
            failures=failures,
        )

    def check_codec(self) -> CheckResult:
        failures = []
        checked = 0
        for n in range(0, 7):
            for mask in range(1 << len(edge_pairs(n))):
                graph = mask_to_graph(n, mask) if n else Graph(0)
                checked += 1
                if parse_graph6(emit_graph6(graph)) != graph:
                    failures.append(f"n={n} mask={mask}")
        for graph in self._realized:
            checked += 1
            if parse_graph6(emit_graph6(graph)) != graph:
                failures.append(emit_graph6(graph))
        return CheckResult(
            'graph6-codec', not failures,
            f"{checked} round trips (all labeled graphs n <= 6 and realized witnesses)",
            failures=failures,
        )
