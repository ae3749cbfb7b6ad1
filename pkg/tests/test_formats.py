import pytest

from chromatic import Graph, InputError, bipartition, complete_bipartite, cycle_graph
from chromatic import formats
from chromatic.rng import SplitMix64


def test_graph_round_trip():
    g = cycle_graph(6)
    assert formats.parse_graph(formats.write_graph(g)) == g


def test_graph_parse_errors():
    with pytest.raises(InputError):
        formats.parse_graph("e 1 2\n")  # missing header
    with pytest.raises(InputError):
        formats.parse_graph("p edge 2 2\ne 1 2\n")  # count mismatch
    with pytest.raises(InputError):
        formats.parse_graph("p edge 2 1\ne 1 3\n")  # out of range


def test_comments_ignored():
    g = formats.parse_graph("c a comment\np edge 2 1\ne 1 2\n")
    assert g.m == 1


def test_bipartite_round_trip():
    b = complete_bipartite(2, 3)
    parsed = formats.parse_bipartite(formats.write_bipartite(b))
    assert parsed == b


def test_bipartite_without_x_lines_derives_parts():
    b = formats.parse_bipartite(formats.write_graph(cycle_graph(6)))
    assert b == bipartition(cycle_graph(6))
    with pytest.raises(InputError):
        formats.parse_bipartite(formats.write_graph(cycle_graph(5)))


def test_hypergraph_round_trip(fano):
    assert formats.parse_hypergraph(formats.write_hypergraph(fano)) == fano


def test_lists_round_trip():
    lists = (frozenset({1, 2}), frozenset({3}), frozenset())
    text = formats.write_lists(lists)
    assert formats.parse_lists(text, 3) == lists


def test_precoloring_round_trip():
    p = {0: 1, 4: 3}
    assert formats.parse_precoloring(formats.write_precoloring(p), 6) == p
    with pytest.raises(InputError):
        formats.parse_precoloring("pc 1 2\npc 1 3\n", 4)


def test_mapping_round_trip():
    images = (3, 1, 2)
    assert formats.parse_mapping(formats.write_mapping(images), 3) == images
    with pytest.raises(InputError):
        formats.parse_mapping("m 1 2\n", 2)  # vertex 2 missing


def test_partition_round_trip():
    blocks = (frozenset({0, 1}), frozenset({2}))
    assert formats.parse_partition(formats.write_partition(blocks), 3) == blocks


def test_families_round_trip():
    fam_a = (frozenset({1, 2}), frozenset({2}))
    fam_b = (frozenset({3}),)
    k, a, b = formats.parse_families(formats.write_families(3, fam_a, fam_b))
    assert (k, a, b) == (3, fam_a, fam_b)


def test_sidecar_round_trip():
    text = formats.write_sidecar((0, 1, 2, 3, 4, 5), ("v1", "v2"))
    cycle, names = formats.parse_sidecar(text)
    assert cycle == (0, 1, 2, 3, 4, 5)
    assert names == {0: "v1", 1: "v2"}


def test_random_graph_round_trips():
    rng = SplitMix64(23)
    for _ in range(25):
        n = rng.randint(1, 12)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        g = Graph(n, edges)
        assert formats.parse_graph(formats.write_graph(g)) == g
