import pytest

from chromatic import (
    BipartiteGraph,
    C6Embedding,
    Graph,
    Hypergraph3,
    InputError,
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
from chromatic.graphs import INF, bfs_distances, is_connected
from chromatic.rng import SplitMix64
from conftest import brute_induced_c6_count, floyd_warshall_diameter


def random_bipartite(rng, n):
    a = rng.randint(1, n - 1)
    edges = [(i, a + j) for i in range(a) for j in range(n - a) if rng.random() < 0.5]
    return BipartiteGraph(Graph(n, edges), ("X",) * a + ("Y",) * (n - a))


def test_graph_invariants_enforced():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])
    g = Graph(4, [(2, 0), (3, 1)])
    assert g.adj[0] == (2,) and g.adj[2] == (0,)
    assert g.m == 2


def test_bipartite_rejects_inner_edges():
    with pytest.raises(InputError):
        BipartiteGraph(Graph(3, [(0, 1)]), ("X", "X", "Y"))


def test_hypergraph_invariants():
    with pytest.raises(InputError):
        Hypergraph3(3, [(0, 1, 1)])
    with pytest.raises(InputError):
        Hypergraph3(4, [(0, 1, 2), (2, 1, 0)])
    h = Hypergraph3(4, [(3, 1, 0)])
    assert h.edges == ((0, 1, 3),)


def test_bipartition_examples():
    assert bipartition(cycle_graph(3)) is None  # odd cycle
    b = bipartition(cycle_graph(6))
    assert b.x_vertices() == (0, 2, 4)
    assert b.y_vertices() == (1, 3, 5)


def test_bipartition_matching_doubled_instance(one_edge):
    # the doubled incidence construction splits as (V u {v'}, V' u E u {v})
    from chromatic.reductions import build_fall3_diam4

    inst = build_fall3_diam4(one_edge)
    parts = bipartition(inst.graph.graph)
    n = one_edge.n
    expected_x = set(range(n)) | {inst.v_all_prime}
    assert set(parts.x_vertices()) == expected_x
    assert set(parts.y_vertices()) == set(range(n, 2 * n)) | {2 * n, inst.v_all}


def test_diameter_examples():
    assert diameter(cycle_graph(6)) == 3
    assert diameter(complete_bipartite(2, 3).graph) == 2
    assert diameter(Graph(2, [])) is INF
    assert diameter(Graph(1, [])) == 0


def test_diameter_of_lifted_path():
    from chromatic.reductions import lift_preext
    from chromatic.solvers import PartialColoring

    lifted = lift_preext(bipartition(path_graph(4)), PartialColoring({}), 2)
    assert diameter(lifted.graph.graph) <= 3
    assert floyd_warshall_diameter(lifted.graph.graph) == diameter(lifted.graph.graph)


def test_diameter_matches_floyd_warshall():
    rng = SplitMix64(11)
    for _ in range(40):
        b = random_bipartite(rng, rng.randint(2, 12))
        assert diameter(b.graph) == floyd_warshall_diameter(b.graph)
    for n in (33, 48, 64):
        b = random_bipartite(rng, n)
        assert diameter(b.graph) == floyd_warshall_diameter(b.graph)


def test_bipartite_complement_examples(k33):
    assert bipartite_complement(k33).graph.m == 0
    c6 = bipartition(cycle_graph(6))
    comp = bipartite_complement(c6)
    assert set(comp.graph.edges()) == {(0, 3), (1, 4), (2, 5)}  # the diagonals


def test_bipartite_complement_involution():
    rng = SplitMix64(5)
    for _ in range(50):
        b = random_bipartite(rng, rng.randint(2, 10))
        assert bipartite_complement(bipartite_complement(b)) == b


def test_enumerate_induced_c6_examples(k33):
    c6 = bipartition(cycle_graph(6))
    embs = enumerate_induced_c6(c6)
    assert len(embs) == 1
    assert embs[0].cycle == (0, 1, 2, 3, 4, 5)
    assert enumerate_induced_c6(k33) == []
    minus_matching = bipartite_complement(
        BipartiteGraph(Graph(6, [(0, 3), (1, 4), (2, 5)]), ("X",) * 3 + ("Y",) * 3)
    )
    assert len(enumerate_induced_c6(minus_matching)) == brute_induced_c6_count(minus_matching) == 1


def test_enumerate_induced_c6_matches_brute_force():
    rng = SplitMix64(17)
    for _ in range(25):
        b = random_bipartite(rng, rng.randint(6, 12))
        embs = enumerate_induced_c6(b)
        assert len(embs) == brute_induced_c6_count(b)
        for emb in embs:
            C6Embedding(b, emb.cycle)  # re-validates every invariant
            assert emb.cycle == canonical_cycle6(emb.cycle)


def test_embedding_rejects_chords(k33):
    with pytest.raises(InputError):
        C6Embedding(k33, (0, 3, 1, 4, 2, 5))


def test_canonical_cycle6():
    assert canonical_cycle6((3, 4, 5, 0, 1, 2)) == (0, 1, 2, 3, 4, 5)
    assert canonical_cycle6((2, 1, 0, 5, 4, 3)) == (0, 1, 2, 3, 4, 5)


def test_dominates_examples():
    g = cycle_graph(6)
    assert dominates(g, range(6), range(6))
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert dominates(star, {0}, range(5))
    assert not dominates(star, {1}, {2})


def test_dominates_on_retract_instance(one_edge):
    from chromatic.reductions import build_c6_retract

    inst = build_c6_retract(one_edge)
    y_c = {inst.pe(1), inst.pe(2), inst.pe(3)}
    assert dominates(inst.graph.graph, y_c, inst.graph.x_vertices())


def test_connectivity_helpers():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(3, [(0, 1)]))
    assert bfs_distances(path_graph(4), 0) == [0, 1, 2, 3]
