"""
Verification Service Unit Tests
Individual checks at reduced scale and the CheckResult row format
"""
import numpy as np
import pytest

from config.base import TestingConfig
from irregularity.services.verification import (
    CheckResult,
    VerificationService,
    random_graph,
    random_near_cubic,
    random_non_edge,
)


@pytest.fixture
def verification():
    return VerificationService(
        TestingConfig,
        delta_cases=60,
        transform_cases=25,
        stream_order=80,
        stream_updates=300,
        stream_checkpoints=10,
        realize_max_half=12,
    )


@pytest.mark.unit
class TestCheckResult:
    """Report rows"""

    def test_to_dict(self):
        result = CheckResult('parity', True, 'no odd values', elapsed=1.23456)
        assert result.to_dict() == {'check': 'parity', 'status': 'PASS', 'detail': 'no odd values'}
        assert result.to_dict(timing=True)['elapsed_seconds'] == 1.235

    def test_failures_are_listed(self):
        result = CheckResult('graph6-codec', False, 'round trips', failures=[f"n={n}" for n in range(30)])
        row = result.to_dict()
        assert row['status'] == 'FAIL'
        assert len(row['failures']) == 20


@pytest.mark.unit
class TestRandomGraphs:
    """Seeded generators"""

    def test_random_graph_is_reproducible(self):
        first = random_graph(12, 0.3, np.random.default_rng(5))
        second = random_graph(12, 0.3, np.random.default_rng(5))
        assert first == second

    def test_random_non_edge(self, rng, k4):
        assert random_non_edge(k4, rng) is None
        graph = random_graph(10, 0.5, rng)
        pair = random_non_edge(graph, rng)
        assert pair is None or not graph.has_edge(*pair)

    def test_near_cubic_has_cubic_edges(self, rng):
        for _ in range(20):
            graph = random_near_cubic(rng)
            assert max(graph.degrees()) == 3
            assert any(graph.degree(u) == 3 and graph.degree(v) == 3 for u, v in graph.edges())


@pytest.mark.unit
class TestChecks:
    """Each acceptance check at reduced scale"""

    def test_tree_checks(self, verification):
        assert verification.check_tree_extremals(8).passed
        assert verification.check_tree_lower_bound(8).passed

    def test_randomized_checks(self, verification, rng):
        assert verification.check_insertion_delta(rng).passed
        assert verification.check_transformation_laws(rng).passed

    def test_incremental_stream(self, verification, rng):
        result = verification.check_incremental_stream(rng)
        assert result.passed, result.failures

    def test_constructions(self, verification):
        assert verification.check_family_closed_form().passed
        assert verification.check_realizability().passed

    def test_spectrum_checks(self, verification):
        spectrum = verification.enumeration.sweep_connected(5)
        assert verification.check_parity(spectrum).passed
        assert verification.check_spectrum_gaps(spectrum).passed

    def test_spectrum_gap_failure_is_reported(self, verification):
        spectrum = verification.enumeration.sweep_connected(4)
        spectrum.attained = spectrum.attained + [12]
        result = verification.check_spectrum_gaps(spectrum)
        assert not result.passed
        assert 'excluded values attained: [12]' in result.failures[0]

    def test_run_all_uses_default_seed(self, verification, mocker):
        spy = mocker.spy(verification, 'check_insertion_delta')
        results = verification.run_all(tree_n=6, sweep_n=4)
        assert [result.name for result in results] == [
            'parity', 'tree-extremals', 'tree-lower-bound', 'insertion-delta',
            'transformation-laws', 'family-closed-form', 'realizability',
            'spectrum-gaps', 'incremental-stream', 'graph6-codec',
        ]
        assert all(result.passed for result in results)
        spy.assert_called_once()
