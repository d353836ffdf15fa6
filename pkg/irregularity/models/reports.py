"""
Report Models
Value objects returned by the invariant, construction and enumeration services
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from irregularity.models.graph import Graph
from irregularity.utils.error_handler import ValidationError
from irregularity.utils.validators import validate_non_negative_integer

EdgeTerm = Tuple[int, int, int]

FAMILY_VARIANTS = (0, 1, 2, 3, 4)


@dataclass(frozen=True)
class NeighborPartition:
    """Neighbours of a vertex split into lower (l), equal (e) and greater (g) degree"""

    l: int
    e: int
    g: int

    @property
    def degree(self) -> int:
        return self.l + self.e + self.g

    def to_dict(self) -> Dict[str, int]:
        return {'l': self.l, 'e': self.e, 'g': self.g}


@dataclass(frozen=True)
class InvariantReport:
    """A(G), A*(G) and Δ, optionally with the per-edge terms of A*"""

    albertson: int
    modified: int
    max_degree: int
    per_edge_terms: Optional[Tuple[EdgeTerm, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            'albertson': self.albertson,
            'modified': self.modified,
            'max_degree': self.max_degree,
        }
        if self.per_edge_terms is not None:
            result['per_edge_terms'] = [list(term) for term in self.per_edge_terms]
        return result


@dataclass(frozen=True)
class FamilySpec:
    """
    Parameters of a constructed witness: i applications of the (3,3)-edge
    subdivision to base variant j built on a prism of two s-cycles.
    """

    i: int
    j: int
    base_size: int = 3

    def __post_init__(self):
        validate_non_negative_integer(self.i, 'i')
        if self.j not in FAMILY_VARIANTS:
            raise ValidationError(f"j must be one of 0..4, got {self.j!r}", 'j')
        size = validate_non_negative_integer(self.base_size, 'base_size')
        if size < 3:
            raise ValidationError(f"base_size must be at least 3, got {size}", 'base_size')

    @property
    def predicted_value(self) -> int:
        if self.j == 0:
            return 10 * self.i
        return 2 * (5 * self.i - 4 * self.j + 20)

    @property
    def effective_base_size(self) -> int:
        """Prism size actually used; grown so that i (3,3) edges stay available"""
        size = max(self.base_size, self.i + 4)
        if self.j == 2:
            size = max(size, 4)
        return size

    def recipe(self) -> str:
        return f"family(i={self.i}, j={self.j}, size={self.effective_base_size})"

    def to_dict(self) -> Dict[str, int]:
        return {
            'i': self.i,
            'j': self.j,
            'base_size': self.effective_base_size,
            'predicted': self.predicted_value,
        }


@dataclass
class WitnessSet:
    """Pairwise non-isomorphic connected graphs sharing one A* value"""

    target: int
    graphs: List[Graph] = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)

    def add(self, graph: Graph, recipe: str) -> None:
        self.graphs.append(graph)
        self.provenance.append(recipe)

    def __len__(self) -> int:
        return len(self.graphs)

    def orders(self) -> List[int]:
        return [graph.order for graph in self.graphs]


@dataclass
class TreeReport:
    """Outcome of an exhaustive sweep over the free trees of one order"""

    n: int
    tree_count: int = 0
    min_value: Optional[int] = None
    max_value: Optional[int] = None
    min_witnesses: int = 0
    max_witnesses: int = 0
    min_witness_is_path: bool = False
    max_witness_is_star: bool = False
    bound_violations: List[str] = field(default_factory=list)
    equality_mismatches: List[str] = field(default_factory=list)
    term_bound_violations: List[str] = field(default_factory=list)
    odd_values: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            not self.bound_violations
            and not self.equality_mismatches
            and not self.term_bound_violations
            and not self.odd_values
            and self.min_witnesses == 1
            and self.max_witnesses == 1
            and self.min_witness_is_path
            and self.max_witness_is_star
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'tree_count': self.tree_count,
            'min_value': self.min_value,
            'min_witnesses': self.min_witnesses,
            'min_witness_is_path': self.min_witness_is_path,
            'max_value': self.max_value,
            'max_witnesses': self.max_witnesses,
            'max_witness_is_star': self.max_witness_is_star,
            'bound_violations': list(self.bound_violations),
            'equality_mismatches': list(self.equality_mismatches),
            'term_bound_violations': list(self.term_bound_violations),
            'odd_values': list(self.odd_values),
            'passed': self.passed,
        }


@dataclass
class SpectrumReport:
    """A* values attained by connected graphs of order at most n"""

    n: int
    attained: List[int] = field(default_factory=list)
    odd_values: List[int] = field(default_factory=list)
    gap_values: List[int] = field(default_factory=list)
    per_order: Dict[int, List[int]] = field(default_factory=dict)
    first_witness: Dict[int, str] = field(default_factory=dict)
    masks_scanned: int = 0
    connected_graphs: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'attained': list(self.attained),
            'odd_values': list(self.odd_values),
            'gap_values': list(self.gap_values),
            'per_order': {str(order): list(values) for order, values in sorted(self.per_order.items())},
            'first_witness': {str(value): g6 for value, g6 in sorted(self.first_witness.items())},
            'masks_scanned': self.masks_scanned,
            'connected_graphs': self.connected_graphs,
            'evidence': 'empirical',
        }
