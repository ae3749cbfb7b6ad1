"""Tour of the exact solvers: colorings, homomorphisms, and certificates.

Run with:  python3 demos/solve_basics.py
"""

from chromatic import (
    FallColoringInstance,
    Graph,
    HomInstance,
    Hypergraph3,
    ListAssignment,
    PartialColoring,
    bipartition,
    complete_bipartite,
    cycle_graph,
    diameter,
    path_graph,
    solve_fall_coloring,
    solve_h2col,
    solve_list_coloring,
    solve_list_hom,
    solve_preext,
    validate,
)

# A 6-cycle is the smallest interesting playground: bipartite, diameter 3.
c6 = cycle_graph(6)
b = bipartition(c6)
print("6-cycle parts:", b.x_vertices(), "/", b.y_vertices(), "diameter", diameter(c6))

# List coloring: an odd cycle with two-element lists has no proper coloring,
# and the solver proves it through the polynomial implication-graph path.
c5 = cycle_graph(5)
print("C5, all lists {1,2}:", solve_list_coloring(c5, ListAssignment([[1, 2]] * 5), 2))

# Precoloring extension: pin one part of the 6-cycle to three distinct
# colors; the other part is forced but feasible.
p = PartialColoring({0: 1, 2: 2, 4: 3})
ext = solve_preext(c6, 3, p)
print("C6 extension of", p.assignments, "->", ext.colors)

# Fall coloring: every closed neighborhood must see all k colors.  On the
# 6-cycle the antipodal pattern works; on K_{3,3} nothing does.
print("C6 3-fall:", solve_fall_coloring(c6, 3).colors)
print("K33 3-fall:", solve_fall_coloring(complete_bipartite(3, 3).graph, 3))

# Homomorphisms to the 6-cycle, with and without surjectivity requirements.
p6 = path_graph(6)
print("P6 -> C6 vertex-surjective:",
      solve_list_hom(p6, c6, mode="vertex_surjective").images)
print("P6 -> C6 edge-surjective:",
      solve_list_hom(p6, c6, mode="edge_surjective"), "(five edges cannot cover six)")

# Certificates are re-checkable objects; validate names the first violation.
bad = validate(FallColoringInstance(c6, 3), solve_fall_coloring(c6, 3))
print("antipodal certificate validates:", bool(bad))
cert = solve_list_hom(p6, c6, mode="plain")
report = validate(HomInstance(p6, c6, mode="edge_surjective"), cert)
print("plain certificate fails edge-surjectivity at:", report.condition, report.witness)

# Hypergraph 2-coloring, the source problem of every hardness construction.
fano = Hypergraph3(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                       (1, 4, 6), (2, 3, 6), (2, 4, 5)])
print("Fano plane 2-colorable:", solve_h2col(fano) is not None)
print("single triple 2-coloring:", solve_h2col(Hypergraph3(3, [(0, 1, 2)])).colors)
