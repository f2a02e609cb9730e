"""Acyclic orientations, dependent arcs, and full orientability of chordal graphs."""

from .chordal import (
    ChordalityVerdict,
    EliminationOrdering,
    is_chordal,
    maximum_cardinality_search,
    simplicial_clique,
    verify_peo,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    add_simplicial_vertex,
    components,
    induced_subgraph,
    is_clique,
    parse_edge_list,
    render_edge_list,
)
from .kernels import BACKEND
from .oracle import (
    CapExceededError,
    SpectrumResult,
    count_acyclic_orientations,
    d_min_exact,
    dependency_spectrum,
    enumerate_acyclic_orientations,
    min_orientation_with_nontrivial_arc,
)
from .orientation import (
    CyclicOrientationError,
    DependencyReport,
    Orientation,
    d_max,
    dependent_arcs,
    is_acyclic,
    is_dependent,
    orient_by_ordering,
    topological_order,
)
from .synthesis import (
    InfeasibleTargetError,
    SynthesisPlan,
    insertion_extension,
    nontrivial_dependent_arc,
    random_chordal,
    source_extension,
    synthesize,
)

__version__ = "0.1.0"
