"""Build every reduction for one small hypergraph and print what comes out.

Run with:  python3 demos/gadget_tour.py
"""

from chromatic import (
    C6Embedding,
    Hypergraph3,
    bipartition,
    cycle_graph,
    diameter,
    retract_to_cycle,
    solve_fall_coloring,
    solve_h2col,
    solve_list_coloring,
    solve_list_hom,
    solve_preext,
)
from chromatic.reductions import (
    appendix_listcol3,
    build_c6_retract,
    build_compaction,
    build_fall3_diam4,
    complete_gadget_mapping,
    fall3_turing_queries,
    fall_lift,
    lift_preext,
    retract_to_preext3,
)
from chromatic.solvers import PartialColoring

h = Hypergraph3(4, [(0, 1, 2), (0, 1, 3)])
print(f"source hypergraph: {h.n} vertices, triples {h.edges}")
coloring = solve_h2col(h)
print("2-coloring:", coloring.colors)

# Incidence graph + cycle: retraction onto the cycle solves 2-colorability.
inst = build_c6_retract(h)
print(f"\nretraction instance: {inst.graph.n} vertices"
      f" (= n + 13m + 6 = {h.n} + {13 * h.m} + 6), diameter {diameter(inst.graph.graph)}")
retraction = retract_to_cycle(inst.graph, inst.embedding.cycle)
print("retraction found:", retraction is not None)
rebuilt = complete_gadget_mapping(inst, coloring)
print("proof-shaped certificate maps the hyperedge vertices to:",
      [inst.names[rebuilt.images[inst.edge_id(j)]] for j in range(h.m)])

# Same graph, now as a 3-precoloring-extension instance.
red = retract_to_preext3(inst.graph, inst.embedding)
print(f"\nprecoloring instance: k={red.k}, {len(red.precoloring.assignments)} pinned"
      f" vertices, extension found: {solve_preext(red.graph, red.k, red.precoloring) is not None}")

# Diagonal gadgets turn the retraction question into pure compaction.
swapped = inst.graph.swap_parts()
comp = build_compaction(swapped, C6Embedding(swapped, inst.embedding.cycle))
print(f"\ncompaction instance: {comp.graph.n} vertices"
      f" ({comp.graph.n - swapped.n} added, 18 per attached vertex),"
      f" diameter {diameter(comp.graph.graph)}")
print("cycle compaction found:",
      solve_list_hom(comp.graph.graph, cycle_graph(6), mode="edge_surjective") is not None)

# The fall-coloring route: matching-doubled incidence graph.
fall = build_fall3_diam4(h)
print(f"\nfall instance: {fall.graph.n} vertices (= 2n + m + 2),"
      f" diameter {diameter(fall.graph.graph)},"
      f" 3-fall-colorable: {solve_fall_coloring(fall.graph.graph, 3) is not None}")

# One-more-color lifts shrink the diameter to 3 without changing answers.
base = bipartition(cycle_graph(6))
lifted = lift_preext(base, PartialColoring({}), 3)
print(f"\nprecoloring lift of the 6-cycle: diameter {diameter(lifted.graph.graph)}, k={lifted.k}")
flifted = fall_lift(base, 3)
print(f"fall lift of the 6-cycle: 4-fall-colorable:"
      f" {solve_fall_coloring(flifted.graph.graph, 4) is not None}")

# Induced-cycle query scheme on a diameter-3 graph.
queries = fall3_turing_queries(base)
print(f"\nquery scheme on the 6-cycle: {len(queries.queries)} query,"
      f" answer {queries.answer}")

# Complete bipartite list instance whose colors are the hypergraph vertices.
app = appendix_listcol3(h)
print(f"\nlist instance: K_{{{h.m},{h.m}}} with palette {app.palette},"
      f" list-colorable: {solve_list_coloring(app.graph.graph, app.lists, app.palette) is not None}")
