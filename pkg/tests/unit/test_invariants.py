"""
Invariant Unit Tests
A, A*, neighbour partitions and the tree bounds
"""
import networkx as nx
import pytest

from config.base import TestingConfig
from irregularity.models.graph import disjoint_union, double_star, make_named_graph, spider
from irregularity.models.reports import NeighborPartition
from irregularity.services.enumeration import EnumerationService
from irregularity.services.invariants import (
    albertson,
    classify_tree_equality,
    edge_imbalance,
    invariant_report,
    is_componentwise_regular,
    max_edge_term,
    modified_albertson,
    neighbor_partition,
    per_edge_terms,
    star_value,
    tree_lower_bound,
)
from irregularity.utils.error_handler import InvariantViolation, PreconditionError, ValidationError
from tests.utils import brute_force_modified, from_networkx


@pytest.mark.unit
class TestModifiedAlbertson:
    """A*(G) on known graphs"""

    def test_path3(self, path3):
        assert albertson(path3) == 2
        assert modified_albertson(path3) == 6

    def test_star(self, star5):
        assert modified_albertson(star5) == 60
        assert star_value(5) == 60

    @pytest.mark.parametrize('kind, size', [
        ('cycle', 7), ('complete', 6), ('prism', 5), ('path', 2), ('path', 1),
    ])
    def test_regular_graphs_vanish(self, kind, size):
        assert modified_albertson(make_named_graph(kind, size)) == 0

    def test_long_paths(self):
        for n in range(3, 12):
            assert modified_albertson(make_named_graph('path', n)) == 6

    def test_star_closed_form(self):
        for n in range(2, 15):
            assert modified_albertson(make_named_graph('star', n)) == star_value(n)

    def test_atlas_against_brute_force(self):
        """Every graph with at most 7 vertices: even, >= A, equals direct summation"""
        for nx_graph in nx.graph_atlas_g():
            graph = from_networkx(nx_graph)
            value = modified_albertson(graph)
            assert value == brute_force_modified(graph)
            assert value % 2 == 0
            assert value >= albertson(graph)
            assert (value == 0) == is_componentwise_regular(graph)


@pytest.mark.unit
class TestEdgeTerms:
    """Per-edge quantities and the assembled report"""

    def test_edge_imbalance(self, path3):
        assert edge_imbalance(path3, 1, 0) == 1

    def test_edge_imbalance_requires_edge(self, path3):
        with pytest.raises(ValidationError):
            edge_imbalance(path3, 0, 2)

    def test_per_edge_terms(self, path3):
        assert per_edge_terms(path3) == [(0, 1, 3), (1, 2, 3)]

    def test_report(self, path3):
        assert invariant_report(path3).to_dict() == {
            'albertson': 2, 'modified': 6, 'max_degree': 2,
        }

    def test_report_with_terms(self, path3):
        report = invariant_report(path3, per_edge=True).to_dict()
        assert report['per_edge_terms'] == [[0, 1, 3], [1, 2, 3]]
        assert list(report) == ['albertson', 'modified', 'max_degree', 'per_edge_terms']


@pytest.mark.unit
class TestNeighborPartition:
    """l / e / g counts"""

    def test_star_centre_and_leaf(self, star5):
        assert neighbor_partition(star5, 0) == NeighborPartition(4, 0, 0)
        assert neighbor_partition(star5, 3) == NeighborPartition(0, 0, 1)

    def test_counts_sum_to_degree(self):
        graph = double_star(2, 3)
        for u in graph.vertices():
            assert neighbor_partition(graph, u).degree == graph.degree(u)

    def test_regular_graph_is_all_equal(self, k4):
        assert neighbor_partition(k4, 2).to_dict() == {'l': 0, 'e': 3, 'g': 0}

    def test_vertex_range(self, path3):
        with pytest.raises(ValidationError):
            neighbor_partition(path3, 5)


@pytest.mark.unit
class TestTreeBounds:
    """Maximum-degree bound and its equality class"""

    @pytest.mark.parametrize('delta, bound', [(0, 0), (1, 0), (2, 6), (3, 24), (4, 60)])
    def test_lower_bound(self, delta, bound):
        assert tree_lower_bound(delta) == bound

    def test_max_edge_term(self):
        assert max_edge_term(5) == 15
        assert max_edge_term(1) == 0

    def test_only_the_star_reaches_the_edge_term_cap(self):
        trees = EnumerationService(TestingConfig)
        for n in range(3, 13):
            cap = max_edge_term(n)
            for tree in trees.enumerate_free_trees(n):
                largest = max(term for _, _, term in per_edge_terms(tree))
                if tree.max_degree == n - 1:
                    assert largest == cap
                else:
                    assert largest < cap

    def test_equality_class_checks_the_bound(self, mocker):
        mocker.patch('irregularity.services.invariants.modified_albertson', return_value=26)
        with pytest.raises(InvariantViolation, match='expected the bound 24'):
            classify_tree_equality(spider([2, 2, 2]))

    def test_outside_class_skips_the_bound(self, mocker):
        measure = mocker.patch('irregularity.services.invariants.modified_albertson')
        assert not classify_tree_equality(double_star(2, 2))
        measure.assert_not_called()

    def test_spider_meets_bound(self):
        tree = spider([2, 2, 2])
        assert modified_albertson(tree) == tree_lower_bound(3) == 24
        assert classify_tree_equality(tree)

    def test_double_star_exceeds_bound(self):
        tree = double_star(2, 2)
        assert modified_albertson(tree) == 32
        assert not classify_tree_equality(tree)

    def test_path_is_in_equality_class(self):
        assert classify_tree_equality(make_named_graph('path', 6))

    def test_classifier_requires_tree(self):
        with pytest.raises(PreconditionError):
            classify_tree_equality(make_named_graph('cycle', 4))

    def test_componentwise_regular(self, path3):
        triangles = disjoint_union(make_named_graph('cycle', 3), make_named_graph('complete', 4))
        assert is_componentwise_regular(triangles)
        assert modified_albertson(triangles) == 0
        assert not is_componentwise_regular(path3)
