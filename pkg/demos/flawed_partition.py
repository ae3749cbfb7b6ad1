"""Why block partitions need not respect matching edges.

A published hardness argument for partitioning a bipartite graph into three
bicliques assumed that any valid partition keeps each matching edge x_i y_i
of the distinguished cycle inside block i.  This walk-through builds the
smallest counterexample: the partition below is perfectly valid yet splits
every matching pair across blocks, while both decision answers stay YES.

Run with:  python3 demos/flawed_partition.py
"""

from chromatic import (
    BicliquePartition,
    BicliquePartitionInstance,
    BipartiteGraph,
    Graph,
    ListAssignment,
    bipartite_complement,
    solve_biclique_partition,
    solve_list_coloring,
    validate,
)
from chromatic.reductions import convert_biclique_surjective, fmps_flawed_instance

# The source instance: a single edge uv with lists {1,2} on both ends.
base = BipartiteGraph(Graph(2, [(0, 1)]), ("X", "Y"))
lists = ListAssignment([{1, 2}, {1, 2}])
print("list-colorable source:", solve_list_coloring(base.graph, lists, 3) is not None)

inst = fmps_flawed_instance(base, lists)
print("constructed graph:", inst.graph.n, "vertices,", inst.graph.graph.m, "edges")
print("vertex names:", inst.names)

# The biclique side of the argument lives on the bipartite complement.
cb = bipartite_complement(inst.graph)
print("bipartite complement has", cb.graph.m, "edges")

ids = {name: i for i, name in enumerate(inst.names)}
exhibited = BicliquePartition((
    frozenset({ids["x1"], ids["x2"], 1}),   # x1, x2, v
    frozenset({ids["y1"], ids["y2"], 0}),   # y1, y2, u
    frozenset({ids["x3"], ids["y3"]}),
))
print("exhibited partition validates:",
      bool(validate(BicliquePartitionInstance(cb, 3), exhibited)))

block_of = {v: i for i, blk in enumerate(exhibited.blocks) for v in blk}
for xi, yi in inst.matching:
    print(f"matching pair ({inst.names[xi]}, {inst.names[yi]}): "
          f"blocks {block_of[xi]} vs {block_of[yi]}"
          + ("  <- split!" if block_of[xi] != block_of[yi] else ""))

# Both decision answers are YES, so the instance itself is consistent; only
# the blockwise-matching assumption in the proof breaks.
print("solver also finds a 3-biclique partition:",
      solve_biclique_partition(cb, 3) is not None)

# The partition still converts to a perfectly good surjective homomorphism
# of the complement's complement onto the 6-cycle.
hom = convert_biclique_surjective(cb, exhibited, "forward")
print("converted homomorphism images:", hom.images)
