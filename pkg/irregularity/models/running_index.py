"""
Running Index Model
A graph paired with its cached A* value for incremental maintenance
"""
from dataclasses import dataclass, field

from irregularity.models.graph import Graph


@dataclass
class RunningIndex:
    """
    Single-writer holder of a graph and its A* value.

    ``work_counter`` counts neighbour-degree inspections made by tracked updates.
    With ``check`` set every update is cross-checked against full recomputation.
    """

    graph: Graph
    current: int
    work_counter: int = 0
    updates: int = 0
    check: bool = field(default=False, repr=False)

    def to_dict(self):
        return {
            'order': self.graph.order,
            'size': self.graph.size,
            'current': self.current,
            'work_counter': self.work_counter,
            'updates': self.updates,
        }
