import pytest

from chromatic import (
    BicliquePartition,
    BicliquePartitionInstance,
    BipartiteGraph,
    C6Embedding,
    Coloring,
    FallColoringInstance,
    Graph,
    H2ColInstance,
    HomInstance,
    Hypergraph3,
    InputError,
    ListAssignment,
    PartialColoring,
    PreconditionError,
    VertexMapping,
    bipartite_complement,
    bipartition,
    complete_bipartite,
    cycle_graph,
    diameter,
    retract_to_cycle,
    solve_fall_coloring,
    solve_h2col,
    solve_list_hom,
    solve_preext,
    validate,
)
from chromatic.reductions import (
    EDGE_GADGET_FORCED,
    FalsificationError,
    appendix_listcol3,
    build_c6_retract,
    build_compaction,
    build_fall3_diam4,
    complete_gadget_mapping,
    convert_biclique_surjective,
    extend_retraction_to_compaction,
    fall3_to_two_coloring,
    fall3_turing_queries,
    fall_lift,
    fall_lift_restrict,
    fmps_flawed_instance,
    lift_extend_coloring,
    lift_preext,
    normalize_compaction,
    retract_to_preext3,
    retraction_to_two_coloring,
    two_coloring_to_fall3,
)
from chromatic.rng import SplitMix64
from chromatic.verify import gen_bipartite, gen_h3, gen_retract_host


def retraction_instance(b, cycle):
    cyc = frozenset(cycle)
    lists = tuple(frozenset([v]) if v in cyc else cyc for v in range(b.n))
    return HomInstance(b.graph, b.graph, lists=lists, fixed=tuple(cycle))


# ---------------------------------------------------------------------------
# palette lifts


def test_lift_single_edge_is_a_path():
    edge = BipartiteGraph(Graph(2, [(0, 1)]), ("X", "Y"))
    lifted = lift_preext(edge, PartialColoring({}), 1)
    # x joins X next to the old Y vertex, y joins Y next to the old X vertex,
    # and there is no x-y edge: a path on four vertices of diameter 3
    assert set(lifted.graph.graph.edges()) == {(0, 1), (1, 2), (0, 3)}
    assert diameter(lifted.graph.graph) == 3
    assert lifted.precoloring.assignments == {2: 2, 3: 2}
    assert solve_preext(edge.graph, 1, PartialColoring({})) is None
    assert solve_preext(lifted.graph.graph, 2, lifted.precoloring) is None


def test_lift_path_both_yes():
    p4 = bipartition(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    lifted = lift_preext(p4, PartialColoring({}), 2)
    assert solve_preext(p4.graph, 2, PartialColoring({})) is not None
    assert solve_preext(lifted.graph.graph, 3, lifted.precoloring) is not None


def test_lift_requires_connected_no_isolated():
    with pytest.raises(PreconditionError):
        lift_preext(BipartiteGraph(Graph(3, [(0, 1)]), ("X", "Y", "X")),
                    PartialColoring({}), 2)


def test_lift_random_equivalence():
    rng = SplitMix64(79)
    for _ in range(25):
        b = gen_bipartite(rng.randint(2, 8), None, rng.next_u64())
        p = PartialColoring({})
        lifted = lift_preext(b, p, 2)
        src = solve_preext(b.graph, 2, p)
        tgt = solve_preext(lifted.graph.graph, 3, lifted.precoloring)
        assert (src is None) == (tgt is None)


# ---------------------------------------------------------------------------
# hypergraph -> cycle retraction


def test_retract_instance_size(one_edge):
    inst = build_c6_retract(one_edge)
    assert inst.graph.n == 3 + 13 * 1 + 6 == 22


def test_retract_fano_no(fano):
    inst = build_c6_retract(fano)
    assert solve_h2col(fano) is None
    assert retract_to_cycle(inst.graph, inst.embedding.cycle) is None


def test_retract_random_equivalence():
    rng = SplitMix64(83)
    for _ in range(20):
        n = rng.randint(3, 6)
        m = rng.randint(1, min(4, n * (n - 1) * (n - 2) // 6))
        h = gen_h3(n, m, rng.next_u64())
        inst = build_c6_retract(h)
        assert (retract_to_cycle(inst.graph, inst.embedding.cycle) is not None) == (
            solve_h2col(h) is not None
        )


def test_retract_requires_a_hyperedge():
    with pytest.raises(PreconditionError):
        build_c6_retract(Hypergraph3(4, []))


def test_gadget_forced_cells_fixture():
    # transcribed from the two published gadget colorings: side 1 under an
    # incident vertex of color 1, and its mirrored side-2 counterpart
    assert EDGE_GADGET_FORCED[(1, 1)] == {"vpp": "pV3", "vp": "pV3", "d": "pE1", "a": "pE2"}
    assert EDGE_GADGET_FORCED[(1, 2)] == {"vpp": "pV1", "vp": "pV2", "c": "pE3", "b": "pE3"}
    assert EDGE_GADGET_FORCED[(2, 1)] == {"vpp": "pV2", "vp": "pV1", "c": "pE3", "b": "pE3"}
    assert EDGE_GADGET_FORCED[(2, 2)] == {"vpp": "pV3", "vp": "pV3", "d": "pE2", "a": "pE1"}
    for (side, color), forced in EDGE_GADGET_FORCED.items():
        assert len(forced) == 4


def test_gadget_mapping_same_color_pair(one_edge):
    inst = build_c6_retract(one_edge)
    found = complete_gadget_mapping(inst, Coloring((1, 1, 2)))
    assert validate(retraction_instance(inst.graph, inst.embedding.cycle), found)
    assert found.images[inst.edge_id(0)] == inst.pe(1)


def test_gadget_mapping_mixed_pair(one_edge):
    inst = build_c6_retract(one_edge)
    found = complete_gadget_mapping(inst, Coloring((1, 2, 1)))
    assert validate(retraction_instance(inst.graph, inst.embedding.cycle), found)
    assert found.images[inst.edge_id(0)] in (inst.pe(1), inst.pe(2))


def test_gadget_mapping_random_colorings_validate():
    rng = SplitMix64(89)
    done = 0
    while done < 15:
        n = rng.randint(3, 6)
        m = rng.randint(1, 4)
        h = gen_h3(n, min(m, n * (n - 1) * (n - 2) // 6), rng.next_u64())
        col = solve_h2col(h)
        if col is None:
            continue
        inst = build_c6_retract(h)
        found = complete_gadget_mapping(inst, col)
        assert validate(retraction_instance(inst.graph, inst.embedding.cycle), found)
        back = retraction_to_two_coloring(inst, found)
        assert validate(H2ColInstance(h), back)
        done += 1


def test_gadget_mapping_rejects_monochromatic(one_edge):
    with pytest.raises(InputError):
        complete_gadget_mapping(build_c6_retract(one_edge), Coloring((1, 1, 1)))


# ---------------------------------------------------------------------------
# cycle precoloring


def test_preext3_chain(one_edge, fano):
    inst = build_c6_retract(one_edge)
    red = retract_to_preext3(inst.graph, inst.embedding)
    assert red.k == 3
    assert diameter(red.graph) <= 4
    assert solve_preext(red.graph, 3, red.precoloring) is not None

    inst_f = build_c6_retract(fano)
    red_f = retract_to_preext3(inst_f.graph, inst_f.embedding)
    assert diameter(red_f.graph) <= 4
    assert solve_preext(red_f.graph, 3, red_f.precoloring) is None


def test_preext3_antipodal_pattern(one_edge):
    inst = build_c6_retract(one_edge)
    red = retract_to_preext3(inst.graph, inst.embedding)
    cyc = inst.embedding.cycle
    assert [red.precoloring.assignments[v] for v in cyc] == [1, 2, 3, 1, 2, 3]


def test_preext3_rejects_unsupported_host(c6):
    # a bare 6-cycle plus a distant pendant fails the distance guarantee
    g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7)])
    b = bipartition(g)
    emb = C6Embedding(b, (0, 1, 2, 3, 4, 5))
    with pytest.raises(PreconditionError):
        retract_to_preext3(b, emb)


# ---------------------------------------------------------------------------
# compaction builder


def host_with_attachment(extra_neighbors=((1, 5),)):
    edges = [(i, (i + 1) % 6) for i in range(6)]
    part = ["X", "Y", "X", "Y", "X", "Y"]
    nxt = 6
    for nbrs in extra_neighbors:
        for w in nbrs:
            edges.append((nxt, w))
        part.append("X")
        nxt += 1
    b = BipartiteGraph(Graph(nxt, edges), part)
    return b, C6Embedding(b, (0, 1, 2, 3, 4, 5))


def test_compaction_vertex_count():
    b, emb = host_with_attachment()
    inst = build_compaction(b, emb)
    assert inst.graph.n - b.n == 18
    assert diameter(inst.graph.graph) <= 4


def test_compaction_equivalence_yes_and_no():
    yes_b, yes_emb = host_with_attachment(((1, 5),))
    no_b, no_emb = host_with_attachment(((1, 3, 5),))
    assert retract_to_cycle(yes_b, yes_emb.cycle) is not None
    assert retract_to_cycle(no_b, no_emb.cycle) is None
    yes_inst = build_compaction(yes_b, yes_emb)
    no_inst = build_compaction(no_b, no_emb)
    assert solve_list_hom(yes_inst.graph.graph, cycle_graph(6), mode="edge_surjective") is not None
    assert solve_list_hom(no_inst.graph.graph, cycle_graph(6), mode="edge_surjective") is None


def test_compaction_rejects_missing_hypotheses(c6):
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 1)])
    b = bipartition(g)
    emb = C6Embedding(b, (0, 1, 2, 3, 4, 5))
    with pytest.raises(PreconditionError):
        build_compaction(b, emb)  # pendant vertex is too far from two cycle X vertices


def test_compaction_cycle_x_flag():
    b, emb = host_with_attachment()
    bare = build_compaction(b, emb)
    wired = build_compaction(b, emb, include_cycle_x=True)
    assert wired.graph.n - bare.graph.n == 18 * 3  # gadgets for h1, h3, h5 too


def test_normalize_compaction_fixes_cycle():
    b, emb = host_with_attachment()
    inst = build_compaction(b, emb)
    comp = solve_list_hom(inst.graph.graph, cycle_graph(6), mode="edge_surjective")
    norm = normalize_compaction(inst.graph, inst.embedding, comp)
    assert all(norm.images[v] == v for v in emb.cycle)
    assert validate(retraction_instance(inst.graph, emb.cycle), norm)


def test_normalize_compaction_keeps_already_fixed_certificate():
    b, emb = host_with_attachment()
    inst = build_compaction(b, emb)
    ret = retract_to_cycle(b, emb.cycle)
    ext = extend_retraction_to_compaction(inst, ret)
    pos = {v: i for i, v in enumerate(emb.cycle)}
    abstract = VertexMapping(
        inst.graph.graph, cycle_graph(6), tuple(pos[x] for x in ext.images)
    )
    norm = normalize_compaction(inst.graph, inst.embedding, abstract)
    assert norm.images == ext.images


def test_normalize_rejects_cycle_only_rotation():
    # rotating only the cycle's own images breaks the homomorphism by parity
    b, emb = host_with_attachment()
    inst = build_compaction(b, emb)
    comp = solve_list_hom(inst.graph.graph, cycle_graph(6), mode="edge_surjective")
    pos = {v: i for i, v in enumerate(emb.cycle)}
    twisted = tuple(
        (comp.images[v] + 1) % 6 if v in pos else comp.images[v]
        for v in range(inst.graph.n)
    )
    with pytest.raises(InputError):
        normalize_compaction(inst.graph, inst.embedding,
                             VertexMapping(inst.graph.graph, cycle_graph(6), twisted))


def test_extend_retraction_to_compaction():
    b, emb = host_with_attachment()
    inst = build_compaction(b, emb)
    ret = retract_to_cycle(b, emb.cycle)
    ext = extend_retraction_to_compaction(inst, ret)
    assert validate(retraction_instance(inst.graph, emb.cycle), ext)


# ---------------------------------------------------------------------------
# biclique <-> surjective homomorphism converters


def test_convert_matching_blocks():
    matching = BipartiteGraph(Graph(6, [(0, 3), (1, 4), (2, 5)]), ("X",) * 3 + ("Y",) * 3)
    blocks = BicliquePartition((frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})))
    hom = convert_biclique_surjective(matching, blocks, "forward")
    cb = bipartite_complement(matching)
    assert validate(HomInstance(cb.graph, cycle_graph(6), mode="vertex_surjective"), hom)
    assert hom.images == (0, 4, 2, 3, 1, 5)
    back = convert_biclique_surjective(matching, hom, "backward")
    assert set(back.blocks) == set(blocks.blocks)


def test_convert_round_trip_randomized():
    from chromatic.verify import _gen_partitioned_bipartite

    rng = SplitMix64(97)
    for _ in range(10):
        b, blocks = _gen_partitioned_bipartite(rng.next_u64())
        hom = convert_biclique_surjective(b, blocks, "forward")
        back = convert_biclique_surjective(b, hom, "backward")
        assert set(back.blocks) == set(blocks.blocks)


def test_convert_rejects_one_sided_block():
    matching = BipartiteGraph(Graph(6, [(0, 3), (1, 4), (2, 5)]), ("X",) * 3 + ("Y",) * 3)
    bad = BicliquePartition((frozenset({0, 1, 3, 4}), frozenset({2, 5}), frozenset()))
    with pytest.raises(InputError):
        convert_biclique_surjective(matching, bad, "forward")


def test_flawed_instance_construction():
    base = BipartiteGraph(Graph(2, [(0, 1)]), ("X", "Y"))
    inst = fmps_flawed_instance(base, ListAssignment([{1, 2}, {1, 2}]))
    g = inst.graph.graph
    x1, x2, x3, y1, y2, y3 = 2, 3, 4, 5, 6, 7
    assert g.has_edge(0, y3)  # 3 is missing from L(u)
    assert not g.has_edge(0, y1) and not g.has_edge(0, y2)
    assert not any(g.has_edge(1, x) for x in (x1, x2, x3))  # Y-side lists unused
    for xi, yi in ((x1, y1), (x2, y2), (x3, y3)):
        assert not g.has_edge(xi, yi)  # the missing matching
    assert g.has_edge(x1, y2) and g.has_edge(x1, y3)


def test_flawed_instance_degenerate_cases():
    empty = BipartiteGraph(Graph(0, []), ())
    inst = fmps_flawed_instance(empty, ListAssignment([]))
    assert inst.graph.n == 6 and inst.graph.graph.m == 6  # just the cycle
    base = BipartiteGraph(Graph(2, [(0, 1)]), ("X", "Y"))
    full = fmps_flawed_instance(base, ListAssignment([{1, 2, 3}, {1, 2, 3}]))
    assert full.graph.graph.m == 1 + 6  # no list edges


# ---------------------------------------------------------------------------
# fall coloring reductions


def test_fall_lift_cycle(c6):
    lifted = fall_lift(c6, 3)
    assert solve_fall_coloring(lifted.graph.graph, 4) is not None


def test_fall_lift_complete_bipartite_both_no(k33):
    lifted = fall_lift(k33, 3)
    assert solve_fall_coloring(k33.graph, 3) is None
    assert solve_fall_coloring(lifted.graph.graph, 4) is None


def test_fall_lift_translators(c6):
    lifted = fall_lift(c6, 3)
    src = solve_fall_coloring(c6.graph, 3)
    up = lift_extend_coloring(src, c6.n, 4)
    assert validate(FallColoringInstance(lifted.graph.graph, 4), up)
    tgt = solve_fall_coloring(lifted.graph.graph, 4)
    down = fall_lift_restrict(tgt, c6.n, 4)
    assert validate(FallColoringInstance(c6.graph, 3), down)


def test_fall_turing_cycle_and_complete(c6, k33):
    red = fall3_turing_queries(c6)
    assert len(red.queries) == 1 and red.answer
    red33 = fall3_turing_queries(k33)
    assert len(red33.queries) == 0 and not red33.answer


def test_fall_turing_rejects_large_diameter():
    b = bipartition(Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]))
    with pytest.raises(PreconditionError):
        fall3_turing_queries(b)


def test_fall_turing_random_agreement():
    rng = SplitMix64(101)
    for _ in range(15):
        b = gen_bipartite(rng.randint(6, 10), 3, rng.next_u64())
        red = fall3_turing_queries(b)
        assert red.answer == (solve_fall_coloring(b.graph, 3) is not None)


def test_fall_diam4_single_edge(one_edge):
    inst = build_fall3_diam4(one_edge)
    assert inst.graph.n == 2 * 3 + 1 + 2 == 9
    assert solve_fall_coloring(inst.graph.graph, 3) is not None
    assert diameter(inst.graph.graph) <= 4


def test_fall_diam4_fano(fano):
    inst = build_fall3_diam4(fano)
    assert diameter(inst.graph.graph) <= 4
    assert solve_fall_coloring(inst.graph.graph, 3) is None


def test_fall_diam4_requires_covered_vertices():
    with pytest.raises(PreconditionError):
        build_fall3_diam4(Hypergraph3(4, [(0, 1, 2)]))


def test_fall_diam4_translators(one_edge):
    inst = build_fall3_diam4(one_edge)
    two = solve_h2col(one_edge)
    fall = two_coloring_to_fall3(inst, two)
    assert validate(FallColoringInstance(inst.graph.graph, 3), fall)
    back = fall3_to_two_coloring(inst, fall)
    assert validate(H2ColInstance(one_edge), back)


# ---------------------------------------------------------------------------
# complete bipartite list instance


def test_appendix_single_edge(one_edge):
    inst = appendix_listcol3(one_edge)
    assert inst.graph.n == 2
    from chromatic import solve_list_coloring

    assert solve_list_coloring(inst.graph.graph, inst.lists, inst.palette) is not None


def test_appendix_fano(fano):
    from chromatic import listcol_complete_bipartite, solve_list_coloring

    inst = appendix_listcol3(fano)
    assert inst.graph.n == 14
    assert solve_list_coloring(inst.graph.graph, inst.lists, inst.palette) is None
    assert listcol_complete_bipartite(inst.graph, inst.lists, inst.palette) is None


def test_appendix_triple_oracle_agreement():
    from chromatic import listcol_complete_bipartite, solve_list_coloring

    rng = SplitMix64(103)
    for _ in range(15):
        n = rng.randint(3, 6)
        m = rng.randint(1, min(4, n * (n - 1) * (n - 2) // 6))
        h = gen_h3(n, m, rng.next_u64())
        inst = appendix_listcol3(h)
        a = solve_h2col(h) is not None
        b = solve_list_coloring(inst.graph.graph, inst.lists, inst.palette) is not None
        c = listcol_complete_bipartite(inst.graph, inst.lists, inst.palette) is not None
        assert a == b == c
