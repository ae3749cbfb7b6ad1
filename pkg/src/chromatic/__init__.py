"""Exact coloring/homomorphism solvers, reduction builders, and their
verification harness for bipartite graphs of small diameter."""

from .graphs import (
    BipartiteGraph,
    C6Embedding,
    Graph,
    Hypergraph3,
    InputError,
    PreconditionError,
    bipartite_complement,
    bipartition,
    canonical_cycle6,
    complete_bipartite,
    cycle_graph,
    diameter,
    dominates,
    enumerate_induced_c6,
    path_graph,
)
from .hitting import SetFamily, complementary_hitting_sets, listcol_complete_bipartite
from .solvers import (
    BicliquePartition,
    BicliquePartitionInstance,
    Coloring,
    FallColoringInstance,
    H2ColInstance,
    HomInstance,
    ListAssignment,
    ListColoringInstance,
    PartialColoring,
    PreExtInstance,
    Verdict,
    VertexMapping,
    retract_to_cycle,
    solve_biclique_partition,
    solve_fall_coloring,
    solve_h2col,
    solve_list_coloring,
    solve_list_hom,
    solve_preext,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
