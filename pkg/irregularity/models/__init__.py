"""
Models Package
Domain types of the irregularity toolkit
"""
from irregularity.models.graph import (
    DegreeProfile,
    Graph,
    build_graph,
    disjoint_union,
    double_star,
    is_connected,
    is_tree,
    make_named_graph,
    spider,
)
from irregularity.models.reports import (
    FamilySpec,
    InvariantReport,
    NeighborPartition,
    SpectrumReport,
    TreeReport,
    WitnessSet,
)
from irregularity.models.run_config import RunConfig
from irregularity.models.running_index import RunningIndex

__all__ = [
    'DegreeProfile',
    'Graph',
    'build_graph',
    'disjoint_union',
    'double_star',
    'is_connected',
    'is_tree',
    'make_named_graph',
    'spider',
    'FamilySpec',
    'InvariantReport',
    'NeighborPartition',
    'SpectrumReport',
    'TreeReport',
    'WitnessSet',
    'RunConfig',
    'RunningIndex',
]
