"""Cross-oracle equivalence harness, property suites, and seeded generators.

Every suite draws its corpus from :class:`~chromatic.rng.SplitMix64`, so a
(suite, seed) pair reproduces the same instances everywhere.  Reports render
deterministically: two runs with the same arguments produce byte-identical
text (the hitting-set scaling probe, which measures wall time, keeps its
timings out of the rendered report).

Each registered reduction also carries at least one single-edge or
single-vertex mutation; running its suite with the mutation enabled must
fail, which guards the equivalence checks against vacuous passes.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass

from .graphs import (
    INF,
    BipartiteGraph,
    C6Embedding,
    Graph,
    Hypergraph3,
    InputError,
    PreconditionError,
    bfs_distances,
    bipartite_complement,
    bipartition,
    complete_bipartite,
    cycle_graph,
    diameter,
    dominates,
    enumerate_induced_c6,
    is_connected,
    path_graph,
)
from .hitting import SetFamily, complementary_hitting_sets, listcol_complete_bipartite
from .reductions import (
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
    lift_restrict_coloring,
    normalize_compaction,
    retract_to_preext3,
    retraction_to_two_coloring,
    two_coloring_to_fall3,
    two_coloring_to_listcol,
)
from .rng import SplitMix64
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

REDUCTION_IDS = (
    "prop1", "thm7", "cor3", "lem7", "cor9",
    "prop10", "prop12", "thm13", "appA", "fmps",
)

SUITE_IDS = (
    "prop1", "thm7", "cor3", "lem7", "cor8", "cor9", "flaw",
    "prop10", "prop12", "thm13", "appA", "faik", "hitset",
)

MUTATIONS = {
    "prop1": ("drop_lift_edge",),
    "thm7": ("drop_kept_incidence",),
    "cor3": ("drop_kept_incidence",),
    "lem7": ("drop_gadget_edge",),
    "cor9": ("drop_block_edge",),
    "prop10": ("drop_lift_edge",),
    "prop12": ("add_cycle_diagonal",),
    "thm13": ("drop_matching_edge",),
    "appA": ("drop_column_vertex",),
    "fmps": ("add_matching_edge",),
}

coverage = Counter()


def _count(key: str) -> None:
    coverage[key] += 1


# ---------------------------------------------------------------------------
# reports


@dataclass
class InstanceVerdict:
    index: int
    source_answer: bool = None
    target_answer: bool = None
    structural_ok: bool = True
    certificates_ok: bool = True
    note: str = ""

    @property
    def answers_match(self) -> bool:
        if self.source_answer is None or self.target_answer is None:
            return True
        return self.source_answer == self.target_answer

    @property
    def ok(self) -> bool:
        return self.answers_match and self.structural_ok and self.certificates_ok

    def line(self) -> str:
        def yn(a):
            return "-" if a is None else ("YES" if a else "NO")

        tail = f" {self.note}" if self.note else ""
        return (
            f"inst {self.index} src={yn(self.source_answer)} tgt={yn(self.target_answer)}"
            f" struct={'ok' if self.structural_ok else 'FAIL'}"
            f" certs={'ok' if self.certificates_ok else 'FAIL'}{tail}"
        )


@dataclass
class EquivalenceReport:
    reduction: str
    corpus: str
    verdicts: list
    incomplete: bool = False
    extra: tuple = ()

    @property
    def mismatches(self) -> int:
        return sum(1 for v in self.verdicts if not v.ok)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0 and not self.incomplete

    @property
    def first_counterexample(self):
        for v in self.verdicts:
            if not v.ok:
                return v
        return None

    def summary_line(self) -> str:
        status = "fail" if self.mismatches else ("incomplete" if self.incomplete else "pass")
        return f"suite {self.reduction} {status} {len(self.verdicts)} {self.mismatches}"

    def render(self) -> str:
        lines = [f"# {self.reduction}: {self.corpus}"]
        lines += [v.line() for v in self.verdicts]
        lines += list(self.extra)
        if self.incomplete:
            lines.append("INCOMPLETE: budget exceeded")
        cx = self.first_counterexample
        if cx is not None:
            lines.append(f"counterexample: {cx.line()}")
        lines.append(self.summary_line())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 1
    count: int = 0
    max_n: int = 7
    max_m: int = 5
    exhaustive_n: int = 0
    exhaustive_m: int = 0
    include_hard: bool = True

    def describe(self) -> str:
        bits = [f"seed={self.seed}"]
        if self.exhaustive_n:
            bits.append(f"exhaustive(n<={self.exhaustive_n},m<={self.exhaustive_m})")
        if self.count:
            bits.append(f"random={self.count}(n<={self.max_n},m<={self.max_m})")
        if self.include_hard:
            bits.append("hard-fixtures")
        return " ".join(bits)


# ---------------------------------------------------------------------------
# generators and fixtures


def fano_plane() -> Hypergraph3:
    """Seven points, seven triples, not 2-colorable; the minimal such system."""
    return Hypergraph3(
        7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    )


def all_triples_on(n: int) -> Hypergraph3:
    return Hypergraph3(n, list(itertools.combinations(range(n), 3)))


def gen_h3(n: int, m: int, seed: int) -> Hypergraph3:
    """Seeded random 3-uniform hypergraph with m distinct triples."""
    if n < 3:
        raise InputError("need n >= 3")
    pool = list(itertools.combinations(range(n), 3))
    if m > len(pool):
        raise InputError(f"only {len(pool)} triples exist on {n} vertices")
    rng = SplitMix64(seed)
    return Hypergraph3(n, sorted(rng.sample(pool, m)))


def gen_h3_covered(n: int, m: int, seed: int) -> Hypergraph3:
    """Like :func:`gen_h3` but every vertex occurs in some triple (resampled)."""
    rng = SplitMix64(seed)
    for _ in range(400):
        h = gen_h3(n, m, rng.next_u64())
        if {v for e in h.edges for v in e} == set(range(n)):
            return h
    raise InputError(f"could not cover {n} vertices with {m} triples")


_P_SWEEP = (0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.15)


def gen_bipartite(n: int, d, seed: int) -> BipartiteGraph:
    """Seeded bipartite graph with diameter exactly ``d`` (or just connected
    when ``d`` is None), found by rejection sampling over a probability sweep."""
    rng = SplitMix64(seed)
    for attempt in range(1200):
        a = rng.randint(1, n - 1) if n > 2 else 1
        p = _P_SWEEP[attempt % len(_P_SWEEP)]
        edges = [
            (i, a + j) for i in range(a) for j in range(n - a) if rng.random() < p
        ]
        try:
            g = Graph(n, edges)
        except InputError:
            continue
        dia = diameter(g)
        if d is None:
            if dia is not INF:
                return BipartiteGraph(g, ("X",) * a + ("Y",) * (n - a))
        elif dia == d:
            return BipartiteGraph(g, ("X",) * a + ("Y",) * (n - a))
    raise InputError(f"could not generate a bipartite graph with n={n}, diameter {d}")


def exhaustive_hypergraphs(max_n: int, max_m: int):
    """All 3-uniform hypergraphs with n <= max_n, 1 <= m <= max_m, deduped by
    their sorted edge list (combinations are emitted canonically sorted)."""
    for n in range(3, max_n + 1):
        pool = list(itertools.combinations(range(n), 3))
        for m in range(1, min(max_m, len(pool)) + 1):
            for combo in itertools.combinations(pool, m):
                yield Hypergraph3(n, list(combo))


def _random_partial_coloring(b: BipartiteGraph, k: int, rng: SplitMix64) -> PartialColoring:
    chosen = {}
    for v in range(b.n):
        if rng.random() < 0.3:
            c = rng.randint(1, k)
            if all(chosen.get(w) != c for w in b.graph.adj[v]):
                chosen[v] = c
    return PartialColoring(chosen)


def gen_retract_host(seed: int):
    """Random small (graph, cycle) pair satisfying the compaction-builder
    hypotheses: extra X vertices attach to >= 2 cycle Y vertices, extra Y
    vertices attach to >= 1 cycle X vertex."""
    rng = SplitMix64(seed)
    edges = [(i, (i + 1) % 6) for i in range(6)]
    part = ["X", "Y", "X", "Y", "X", "Y"]
    nxt = 6
    extra_x = []
    for _ in range(rng.randint(1, 3)):
        u = nxt
        nxt += 1
        part.append("X")
        extra_x.append(u)
        for w in rng.sample((1, 3, 5), rng.randint(2, 3)):
            edges.append((u, w))
    for _ in range(rng.randint(0, 2)):
        w = nxt
        nxt += 1
        part.append("Y")
        for hv in rng.sample((0, 2, 4), rng.randint(1, 3)):
            edges.append((w, hv))
        for u in extra_x:
            if rng.random() < 0.3:
                edges.append((w, u))
    b = BipartiteGraph(Graph(nxt, edges), part)
    return b, C6Embedding(b, (0, 1, 2, 3, 4, 5))


# ---------------------------------------------------------------------------
# counted oracle fronts


def _oracle_h2col(h):
    _count("solve_h2col")
    return solve_h2col(h)


def _oracle_retraction(b, cycle):
    _count("solve_list_hom:retraction")
    return retract_to_cycle(b, cycle)


def _oracle_compaction(g: Graph):
    _count("solve_list_hom:edge_surjective")
    return solve_list_hom(g, cycle_graph(6), mode="edge_surjective")


def _oracle_surjective(g: Graph):
    _count("solve_list_hom:vertex_surjective")
    return solve_list_hom(g, cycle_graph(6), mode="vertex_surjective")


def _oracle_preext(g, k, p):
    _count("solve_preext")
    return solve_preext(g, k, p)


def _oracle_listcol(g, lists, k):
    _count("solve_list_coloring")
    return solve_list_coloring(g, lists, k)


def _oracle_fall(g, k):
    _count("solve_fall_coloring")
    return solve_fall_coloring(g, k)


def _oracle_biclique(b, k):
    _count("solve_biclique_partition")
    return solve_biclique_partition(b, k)


def _oracle_chs(a, b, k):
    _count("complementary_hitting_sets")
    return complementary_hitting_sets(a, b, k)


def _oracle_listcol_cb(b, lists, k):
    _count("listcol_complete_bipartite")
    return listcol_complete_bipartite(b, lists, k)


# ---------------------------------------------------------------------------
# structural helpers shared by suites


def _drop_edge(b: BipartiteGraph, u: int, v: int) -> BipartiteGraph:
    edges = [e for e in b.graph.edges() if e != (min(u, v), max(u, v))]
    return BipartiteGraph(Graph(b.n, edges), b.part_of)


def _add_edge(b: BipartiteGraph, u: int, v: int) -> BipartiteGraph:
    edges = list(b.graph.edges()) + [(u, v)]
    return BipartiteGraph(Graph(b.n, edges), b.part_of)


def _drop_vertex(b: BipartiteGraph, v: int) -> BipartiteGraph:
    keep = [u for u in range(b.n) if u != v]
    remap = {u: i for i, u in enumerate(keep)}
    edges = [(remap[a], remap[c]) for a, c in b.graph.edges() if v not in (a, c)]
    part = tuple(b.part_of[u] for u in keep)
    return BipartiteGraph(Graph(b.n - 1, edges), part)


def fall_cert_sides_ok(b: BipartiteGraph, cert: Coloring, k: int) -> bool:
    """Fall colorings of bipartite graphs with k >= 3 use every color on both
    sides; violations would falsify the color-side property."""
    if k < 3:
        return True
    palette = frozenset(range(1, k + 1))
    fx = frozenset(cert.colors[v] for v in b.x_vertices())
    fy = frozenset(cert.colors[v] for v in b.y_vertices())
    return fx == palette and fy == palette


def _fall_sides_note(b, cert, k) -> str:
    return "" if fall_cert_sides_ok(b, cert, k) else "FALSIFICATION: fall colors missing on a side"


def _thm7_structure(inst, graph: BipartiteGraph) -> bool:
    h = inst.hypergraph
    if graph.n != h.n + 13 * h.m + 6:
        return False
    y_c = {inst.pe(1), inst.pe(2), inst.pe(3)}
    if not dominates(graph.graph, y_c, graph.x_vertices()):
        return False
    ys = graph.y_vertices()
    for hv in sorted(y_c):
        dist = bfs_distances(graph.graph, hv)
        if any(dist[y] > 2 for y in ys):
            return False
    return is_connected(graph.graph)


def _retraction_instance(b: BipartiteGraph, cycle) -> HomInstance:
    cyc = frozenset(cycle)
    lists = tuple(
        frozenset([v]) if v in cyc else cyc for v in range(b.n)
    )
    return HomInstance(b.graph, b.graph, lists=lists, fixed=tuple(cycle))


def _abstract(cycle, mapping: VertexMapping) -> VertexMapping:
    """Host-vertex retraction certificate viewed as a map to the abstract cycle."""
    pos = {v: i for i, v in enumerate(cycle)}
    return VertexMapping(
        source=mapping.source,
        target=cycle_graph(6),
        images=tuple(pos[x] for x in mapping.images),
    )


# ---------------------------------------------------------------------------
# suites


def _finish(rid, corpus_desc, verdicts, incomplete, extra=()):
    return EquivalenceReport(rid, corpus_desc, verdicts, incomplete, tuple(extra))


def _expired(deadline) -> bool:
    return deadline is not None and time.monotonic() > deadline


def suite_prop1(spec: CorpusSpec = CorpusSpec(count=100, max_n=10), mutation=None, deadline=None):
    """Precoloring lift: answers transfer between (G, p, k) and the lifted
    (G', p', k+1); both certificate translators validate."""
    rng = SplitMix64(spec.seed)
    items = []
    edge = BipartiteGraph(Graph(2, [(0, 1)]), ("X", "Y"))
    items.append((edge, PartialColoring({}), 1))
    p4 = bipartition(path_graph(4))
    items.append((p4, PartialColoring({}), 2))
    for _ in range(spec.count):
        n = rng.randint(2, spec.max_n)
        b = gen_bipartite(n, None, rng.next_u64())
        items.append((b, _random_partial_coloring(b, 3, rng), 3))

    verdicts = []
    incomplete = False
    for idx, (b, p, k) in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:prop1")
        lifted = lift_preext(b, p, k)
        graph2 = lifted.graph
        if mutation == "drop_lift_edge":
            graph2 = _drop_edge(graph2, lifted.x, min(b.y_vertices()))
        v = InstanceVerdict(idx)
        v.structural_ok = diameter(graph2.graph) <= 3 and graph2.n == b.n + 2
        src = _oracle_preext(b.graph, k, p)
        tgt = _oracle_preext(graph2.graph, lifted.k, lifted.precoloring)
        v.source_answer = src is not None
        v.target_answer = tgt is not None
        try:
            if tgt is not None:
                back = lift_restrict_coloring(tgt, b.n)
                v.certificates_ok &= bool(validate(PreExtInstance(b.graph, k, p), back))
            if src is not None:
                fwd = lift_extend_coloring(src, b.n, k + 1)
                v.certificates_ok &= bool(
                    validate(PreExtInstance(graph2.graph, lifted.k, lifted.precoloring), fwd)
                )
        except (InputError, FalsificationError) as e:
            v.certificates_ok = False
            v.note = str(e)
        verdicts.append(v)
    return _finish("prop1", spec.describe(), verdicts, incomplete)


def _thm7_corpus(spec: CorpusSpec):
    items = []
    if spec.exhaustive_n:
        items.extend(exhaustive_hypergraphs(spec.exhaustive_n, spec.exhaustive_m))
    rng = SplitMix64(spec.seed)
    for _ in range(spec.count):
        n = rng.randint(3, spec.max_n)
        max_m = min(spec.max_m, n * (n - 1) * (n - 2) // 6)
        items.append(gen_h3(n, rng.randint(1, max_m), rng.next_u64()))
    if spec.include_hard:
        items.append(fano_plane())
        items.append(all_triples_on(5))
    return items


def suite_thm7(spec: CorpusSpec = CorpusSpec(count=100, exhaustive_n=5, exhaustive_m=3),
               mutation=None, deadline=None):
    """Cycle-retraction builder: retraction onto the distinguished cycle is
    equivalent to hypergraph 2-colorability; structure checked on every output."""
    verdicts = []
    incomplete = False
    for idx, h in enumerate(_thm7_corpus(spec)):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:thm7")
        inst = build_c6_retract(h)
        graph = inst.graph
        if mutation == "drop_kept_incidence":
            graph = _drop_edge(graph, inst.edge_id(0), h.edges[0][2])
        v = InstanceVerdict(idx)
        v.structural_ok = _thm7_structure(inst, graph)
        src = _oracle_h2col(h)
        tgt = _oracle_retraction(graph, inst.embedding.cycle)
        v.source_answer = src is not None
        v.target_answer = tgt is not None
        try:
            if tgt is not None:
                v.certificates_ok &= bool(validate(_retraction_instance(graph, inst.embedding.cycle), tgt))
                back = retraction_to_two_coloring(inst, tgt)
                v.certificates_ok &= bool(validate(H2ColInstance(h), back))
            if src is not None and mutation is None:
                fwd = complete_gadget_mapping(inst, src)
                v.certificates_ok &= bool(validate(_retraction_instance(inst.graph, inst.embedding.cycle), fwd))
        except (InputError, FalsificationError) as e:
            v.certificates_ok = False
            v.note = str(e)
        verdicts.append(v)
    return _finish("thm7", spec.describe(), verdicts, incomplete)


def suite_cor3(spec: CorpusSpec = CorpusSpec(count=40, max_n=6, max_m=3,
                                             exhaustive_n=4, exhaustive_m=2),
               mutation=None, deadline=None):
    """Cycle precoloring: a 3-extension exists iff the retraction exists iff
    the source hypergraph is 2-colorable; diameter <= 4 on every instance."""
    verdicts = []
    incomplete = False
    for idx, h in enumerate(_thm7_corpus(spec)):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:cor3")
        inst = build_c6_retract(h)
        red = retract_to_preext3(inst.graph, inst.embedding)
        graph = inst.graph
        if mutation == "drop_kept_incidence":
            graph = _drop_edge(graph, inst.edge_id(0), h.edges[0][2])
        v = InstanceVerdict(idx)
        v.structural_ok = diameter(graph.graph) <= 4
        src = _oracle_h2col(h)
        ext = _oracle_preext(graph.graph, 3, red.precoloring)
        ret = _oracle_retraction(graph, inst.embedding.cycle)
        v.source_answer = src is not None
        v.target_answer = ext is not None
        if (ext is None) != (ret is None):
            v.structural_ok = False
            v.note = "extension and retraction disagree"
        if ext is not None:
            v.certificates_ok &= bool(
                validate(PreExtInstance(graph.graph, 3, red.precoloring), ext)
            )
        verdicts.append(v)
    return _finish("cor3", spec.describe(), verdicts, incomplete)


def _lem7_corpus(spec: CorpusSpec):
    rng = SplitMix64(spec.seed)
    items = []
    for _ in range(spec.count):
        items.append(gen_retract_host(rng.next_u64()))
    # Chained sources stay at one hyperedge: the doubled instances already
    # reach ~190 vertices, and the exact edge-surjective search blows up a
    # couple of hyperedges later.
    chained = 6 if spec.include_hard else 0
    for _ in range(chained):
        h = gen_h3(rng.randint(3, 6), 1, rng.next_u64())
        inst = build_c6_retract(h)
        sw = inst.graph.swap_parts()
        items.append((sw, C6Embedding(sw, inst.embedding.cycle)))
    return items


def suite_lem7(spec: CorpusSpec = CorpusSpec(count=60), mutation=None, deadline=None):
    """Diagonal-gadget builder: the built graph has a cycle compaction iff
    the base retracts onto the cycle; 18 new vertices per attached X vertex."""
    verdicts = []
    incomplete = False
    for idx, (b, emb) in enumerate(_lem7_corpus(spec)):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:lem7")
        inst = build_compaction(b, emb)
        graph = inst.graph
        if mutation == "drop_gadget_edge":
            first_b1 = inst.names.index(f"u{inst.attached[0] + 1}:d14:b1")
            cyc = inst.embedding.cycle
            if b.part_of[cyc[0]] != "X":
                cyc = cyc[1:] + cyc[:1]
            graph = _drop_edge(graph, first_b1, cyc[0])
        v = InstanceVerdict(idx)
        x_h = frozenset(w for w in emb.cycle if b.part_of[w] == "X")
        v.structural_ok = (
            graph.n - b.n == 18 * len(inst.attached)
            and diameter(graph.graph) <= 4
            and dominates(graph.graph, x_h, graph.y_vertices())
        )
        if v.structural_ok:
            for hv in sorted(x_h):
                dist = bfs_distances(graph.graph, hv)
                if any(dist[x] > 2 for x in graph.x_vertices()):
                    v.structural_ok = False
                    break
        src = _oracle_retraction(b, emb.cycle)
        tgt = _oracle_compaction(graph.graph)
        v.source_answer = src is not None
        v.target_answer = tgt is not None
        try:
            if tgt is not None and mutation is None:
                norm = normalize_compaction(inst.graph, inst.embedding, tgt)
                base_restriction = VertexMapping(
                    source=b.graph, target=b.graph, images=norm.images[: b.n]
                )
                v.certificates_ok &= bool(
                    validate(_retraction_instance(b, emb.cycle), base_restriction)
                )
            if src is not None and mutation is None:
                ext = extend_retraction_to_compaction(inst, src)
                v.certificates_ok &= bool(
                    validate(_retraction_instance(inst.graph, emb.cycle), ext)
                )
                v.certificates_ok &= bool(
                    validate(
                        HomInstance(inst.graph.graph, cycle_graph(6), mode="edge_surjective"),
                        _abstract(emb.cycle, ext),
                    )
                )
        except (InputError, FalsificationError) as e:
            v.certificates_ok = False
            v.note = f"FALSIFICATION: {e}" if isinstance(e, FalsificationError) else str(e)
        verdicts.append(v)
    return _finish("lem7", spec.describe(), verdicts, incomplete)


def cor8_check(b: BipartiteGraph) -> InstanceVerdict:
    """Surjective-homomorphism answer vs compaction answer; they must agree
    whenever the diameter is at most 4, and are merely recorded otherwise."""
    v = InstanceVerdict(0)
    d = diameter(b.graph)
    surj = _oracle_surjective(b.graph)
    comp = _oracle_compaction(b.graph)
    v.source_answer = surj is not None
    v.target_answer = comp is not None
    if d > 4:
        v.note = f"diameter {d} > 4: answers recorded, not compared"
        v.target_answer = v.source_answer  # divergence allowed: do not fail
    return v


def suite_cor8(spec: CorpusSpec = CorpusSpec(count=20), mutation=None, deadline=None):
    """Diameter-gated agreement of surjective homomorphism and compaction,
    with the diameter-5 path as the allowed-divergence witness."""
    rng = SplitMix64(spec.seed)
    items = []
    c6 = bipartition(cycle_graph(6))
    items.append(("c6", c6))
    items.append(("p6", bipartition(path_graph(6))))
    for i in range(spec.count):
        b, emb = gen_retract_host(rng.next_u64())
        items.append((f"gadget{i}", build_compaction(b, emb).graph))
    verdicts = []
    incomplete = False
    p6_divergence = False
    for idx, (label, b) in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        v = cor8_check(b)
        v.index = idx
        if label == "p6":
            surj_yes = _oracle_surjective(b.graph) is not None
            comp_yes = _oracle_compaction(b.graph) is not None
            p6_divergence = surj_yes and not comp_yes
            if not p6_divergence:
                v.structural_ok = False
                v.note = "path on six vertices should be surjective-YES, compaction-NO"
        verdicts.append(v)
    extra = [f"p6-divergence-exercised {p6_divergence}"]
    return _finish("cor8", spec.describe(), verdicts, incomplete, extra)


def _gen_partitioned_bipartite(seed: int):
    """Random bipartite graph built around a known 3-biclique partition."""
    rng = SplitMix64(seed)
    sizes = [(rng.randint(1, 2), rng.randint(1, 2)) for _ in range(3)]
    xs, ys, blocks = [], [], []
    nxt = 0
    part = []
    for sx, sy in sizes:
        bx = list(range(nxt, nxt + sx))
        nxt += sx
        by = list(range(nxt, nxt + sy))
        nxt += sy
        xs += bx
        ys += by
        part += ["X"] * sx + ["Y"] * sy
        blocks.append(frozenset(bx + by))
    edges = []
    for i, blk in enumerate(blocks):
        bx = [v for v in blk if part[v] == "X"]
        by = [v for v in blk if part[v] == "Y"]
        edges += [(u, w) for u in bx for w in by]
        for j in range(i + 1, 3):
            ox = [v for v in blocks[j] if part[v] == "X"]
            oy = [v for v in blocks[j] if part[v] == "Y"]
            for u in bx:
                for w in oy:
                    if rng.random() < 0.4:
                        edges.append((u, w))
            for u in ox:
                for w in by:
                    if rng.random() < 0.4:
                        edges.append((u, w))
    b = BipartiteGraph(Graph(nxt, edges), part)
    return b, BicliquePartition(tuple(blocks))


def suite_cor9(spec: CorpusSpec = CorpusSpec(count=50), mutation=None, deadline=None):
    """Round trip between 3-biclique partitions and surjective cycle
    homomorphisms of the bipartite complement."""
    rng = SplitMix64(spec.seed)
    items = [_gen_partitioned_bipartite(rng.next_u64()) for _ in range(spec.count)]
    matching = BipartiteGraph(
        Graph(6, [(0, 3), (1, 4), (2, 5)]), ("X", "X", "X", "Y", "Y", "Y")
    )
    items.append((matching, BicliquePartition((frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})))))
    verdicts = []
    incomplete = False
    for idx, (b, partition) in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:cor9")
        graph = b
        if mutation == "drop_block_edge":
            blk = partition.blocks[0]
            u = min(v for v in blk if graph.part_of[v] == "X")
            w = min(v for v in blk if graph.part_of[v] == "Y")
            graph = _drop_edge(graph, u, w)
        v = InstanceVerdict(idx)
        cb = bipartite_complement(graph)
        v.structural_ok = bool(validate(BicliquePartitionInstance(graph, 3), partition))
        try:
            fwd = convert_biclique_surjective(graph, partition, "forward")
            v.certificates_ok &= bool(
                validate(HomInstance(cb.graph, cycle_graph(6), mode="vertex_surjective"), fwd)
            )
            back = convert_biclique_surjective(graph, fwd, "backward")
            v.certificates_ok &= set(back.blocks) == set(partition.blocks)
            v.certificates_ok &= bool(validate(BicliquePartitionInstance(graph, 3), back))
            v.source_answer = True
            v.target_answer = v.certificates_ok
        except (InputError, FalsificationError) as e:
            v.certificates_ok = False
            v.note = str(e)
        verdicts.append(v)
    return _finish("cor9", spec.describe(), verdicts, incomplete)


def suite_flaw(spec: CorpusSpec = CorpusSpec(), mutation=None, deadline=None):
    """Regression for the published broken biclique argument: the exhibited
    partition is valid, splits a matching pair across blocks, and both
    decision answers stay YES."""
    base = BipartiteGraph(Graph(2, [(0, 1)]), ("X", "Y"))
    lists = ListAssignment([{1, 2}, {1, 2}])
    _count("build:fmps")
    inst = fmps_flawed_instance(base, lists)
    graph = inst.graph
    if mutation == "add_matching_edge":
        graph = _add_edge(graph, inst.names.index("x1"), 1)  # x1 to the base Y vertex
    cb = bipartite_complement(graph)
    x1, x2, x3 = (inst.names.index(n) for n in ("x1", "x2", "x3"))
    y1, y2, y3 = (inst.names.index(n) for n in ("y1", "y2", "y3"))
    exhibited = BicliquePartition(
        (frozenset({x1, x2, 1}), frozenset({y1, y2, 0}), frozenset({x3, y3}))
    )
    v = InstanceVerdict(0)
    v.structural_ok = bool(validate(BicliquePartitionInstance(cb, 3), exhibited))
    block_of = {}
    for i, blk in enumerate(exhibited.blocks):
        for w in blk:
            block_of[w] = i
    split = any(block_of[a] != block_of[b] for a, b in inst.matching)
    if not split:
        v.structural_ok = False
        v.note = "no matching pair was split across blocks"
    src = _oracle_listcol(base.graph, lists, 3)
    tgt = _oracle_biclique(cb, 3)
    v.source_answer = src is not None
    v.target_answer = tgt is not None
    if v.structural_ok:
        # the exhibited partition also converts to a valid surjective
        # homomorphism, despite not respecting the matching blockwise
        hom = convert_biclique_surjective(cb, exhibited, "forward")
        v.certificates_ok &= bool(
            validate(
                HomInstance(bipartite_complement(cb).graph, cycle_graph(6),
                            mode="vertex_surjective"),
                hom,
            )
        )
    extra = ["split-pair True" if split else "split-pair False"]
    return _finish("flaw", spec.describe(), [v], False, extra)


def suite_prop10(spec: CorpusSpec = CorpusSpec(count=60, max_n=10), mutation=None, deadline=None):
    """Fall lift: k-fall-colorability transfers to (k+1) on the lifted graph;
    translated certificates validate and color both sides fully."""
    rng = SplitMix64(spec.seed)
    items = [bipartition(cycle_graph(6)), complete_bipartite(3, 3)]
    for _ in range(spec.count):
        n = rng.randint(4, spec.max_n)
        items.append(gen_bipartite(n, None, rng.next_u64()))
    verdicts = []
    incomplete = False
    for idx, b in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        if any(b.graph.degree(v) == 0 for v in range(b.n)) or not is_connected(b.graph):
            continue
        _count("build:prop10")
        lifted = fall_lift(b, 3)
        graph2 = lifted.graph
        if mutation == "drop_lift_edge":
            graph2 = _drop_edge(graph2, lifted.x, min(b.y_vertices()))
        v = InstanceVerdict(idx)
        v.structural_ok = diameter(graph2.graph) <= 3 and graph2.n == b.n + 2
        src = _oracle_fall(b.graph, 3)
        tgt = _oracle_fall(graph2.graph, 4)
        v.source_answer = src is not None
        v.target_answer = tgt is not None
        try:
            if src is not None:
                v.note = _fall_sides_note(b, src, 3)
                fwd = lift_extend_coloring(src, b.n, 4)
                v.certificates_ok &= bool(validate(FallColoringInstance(graph2.graph, 4), fwd))
            if tgt is not None:
                v.certificates_ok &= bool(validate(FallColoringInstance(graph2.graph, 4), tgt))
                v.note = v.note or _fall_sides_note(graph2, tgt, 4)
                if mutation is None:
                    back = fall_lift_restrict(tgt, b.n, 4)
                    v.certificates_ok &= bool(validate(FallColoringInstance(b.graph, 3), back))
        except (InputError, FalsificationError) as e:
            v.certificates_ok = False
            v.note = f"FALSIFICATION: {e}" if isinstance(e, FalsificationError) else str(e)
        if v.note.startswith("FALSIFICATION"):
            v.certificates_ok = False
        verdicts.append(v)
    return _finish("prop10", spec.describe(), verdicts, incomplete)


def suite_prop12(spec: CorpusSpec = CorpusSpec(count=80, max_n=12), mutation=None, deadline=None):
    """Induced-cycle query scheme: the OR of the precoloring-extension
    queries equals direct 3-fall solving on diameter-3 bipartite inputs."""
    rng = SplitMix64(spec.seed)
    items = [bipartition(cycle_graph(6)), complete_bipartite(3, 3)]
    for _ in range(spec.count):
        n = rng.randint(6, spec.max_n)
        items.append(gen_bipartite(n, 3, rng.next_u64()))
    verdicts = []
    incomplete = False
    relabel_checked = 0
    for idx, b in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        graph = b
        if mutation == "add_cycle_diagonal":
            embs = enumerate_induced_c6(b)
            if embs:
                cyc = embs[0].cycle
                graph = _add_edge(b, cyc[0], cyc[3])
        _count("build:prop12")
        red = fall3_turing_queries(graph)
        v = InstanceVerdict(idx)
        src = _oracle_fall(b.graph, 3)
        v.source_answer = src is not None
        v.target_answer = red.answer
        _count("solve_preext")
        if red.witness is not None:
            fall_ok = validate(FallColoringInstance(graph.graph, 3), red.witness)
            if not fall_ok:
                v.certificates_ok = False
                v.note = "FALSIFICATION: extension of a fall-colored cycle is not a fall coloring"
            elif not fall_cert_sides_ok(graph, red.witness, 3):
                v.certificates_ok = False
                v.note = "FALSIFICATION: fall colors missing on a side"
        if mutation is None and relabel_checked < 8 and red.queries:
            # one labeling per cycle must decide like all six relabelings
            agg = False
            for emb, _ in red.queries:
                for perm in itertools.permutations((1, 2, 3)):
                    pattern = tuple(perm[(i % 3)] for i in range(6))
                    p = PartialColoring({w: pattern[i] for i, w in enumerate(emb.cycle)})
                    if solve_preext(graph.graph, 3, p) is not None:
                        agg = True
                        break
                if agg:
                    break
            if agg != red.answer:
                v.structural_ok = False
                v.note = "single-labeling shortcut disagrees with full relabeling"
            relabel_checked += 1
        verdicts.append(v)
    return _finish("prop12", spec.describe(), verdicts, incomplete)


def suite_thm13(spec: CorpusSpec = CorpusSpec(count=100, exhaustive_n=5, exhaustive_m=3),
                mutation=None, deadline=None):
    """Matching-doubled incidence builder: 3-fall-colorability of the output
    equals 2-colorability of the hypergraph; diameter <= 4, 2n+m+2 vertices."""
    items = [
        h for h in _thm7_corpus(spec)
        if {v for e in h.edges for v in e} == set(range(h.n))
    ]
    rng = SplitMix64(spec.seed)
    want_random = spec.count
    while want_random > 0:
        n = rng.randint(3, spec.max_n)
        max_m = min(spec.max_m, n * (n - 1) * (n - 2) // 6)
        m = rng.randint(max(1, (n + 2) // 3), max_m)
        try:
            items.append(gen_h3_covered(n, m, rng.next_u64()))
        except InputError:
            pass
        want_random -= 1
    verdicts = []
    incomplete = False
    for idx, h in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:thm13")
        inst = build_fall3_diam4(h)
        graph = inst.graph
        if mutation == "drop_matching_edge":
            graph = _drop_edge(graph, 0, inst.copy_id(0))
        v = InstanceVerdict(idx)
        v.structural_ok = graph.n == 2 * h.n + h.m + 2 and diameter(graph.graph) <= 4
        xs = set(graph.x_vertices())
        expected_x = set(range(h.n)) | {inst.v_all_prime}
        if xs != expected_x and set(graph.y_vertices()) != expected_x:
            v.structural_ok = False
            v.note = "bipartition does not match the construction"
        src = _oracle_h2col(h)
        tgt = _oracle_fall(graph.graph, 3)
        v.source_answer = src is not None
        v.target_answer = tgt is not None
        try:
            if src is not None:
                fwd = two_coloring_to_fall3(inst, src)
                check = validate(FallColoringInstance(inst.graph.graph, 3), fwd)
                if mutation is None:
                    v.certificates_ok &= bool(check)
                    v.certificates_ok &= fall_cert_sides_ok(inst.graph, fwd, 3)
            if tgt is not None:
                v.certificates_ok &= fall_cert_sides_ok(graph, tgt, 3)
                back = fall3_to_two_coloring(inst, tgt)
                v.certificates_ok &= bool(validate(H2ColInstance(h), back))
        except (InputError, FalsificationError) as e:
            v.certificates_ok = False
            v.note = str(e)
        verdicts.append(v)
    return _finish("thm13", spec.describe(), verdicts, incomplete)


def suite_appA(spec: CorpusSpec = CorpusSpec(count=100, exhaustive_n=5, exhaustive_m=3),
               mutation=None, deadline=None):
    """Complete-bipartite list instance: list-colorability equals hypergraph
    2-colorability, decided identically by the generic solver and the
    hitting-set path."""
    verdicts = []
    incomplete = False
    for idx, h in enumerate(_thm7_corpus(spec)):
        if _expired(deadline):
            incomplete = True
            break
        _count("build:appA")
        inst = appendix_listcol3(h)
        graph, lists = inst.graph, inst.lists
        if mutation == "drop_column_vertex":
            graph = _drop_vertex(graph, graph.n - 1)
            lists = ListAssignment(list(lists)[: graph.n])
        v = InstanceVerdict(idx)
        src = _oracle_h2col(h)
        generic = _oracle_listcol(graph.graph, lists, inst.palette)
        try:
            fast = _oracle_listcol_cb(graph, lists, inst.palette)
        except PreconditionError as e:
            v.structural_ok = False
            v.note = str(e)
            fast = generic
        v.source_answer = src is not None
        v.target_answer = generic is not None
        if (generic is None) != (fast is None):
            v.structural_ok = False
            v.note = "generic solver and hitting-set path disagree"
        if generic is not None:
            v.certificates_ok &= bool(
                validate(ListColoringInstance(graph.graph, lists, inst.palette), generic)
            )
        if fast is not None:
            v.certificates_ok &= bool(
                validate(ListColoringInstance(graph.graph, lists, inst.palette), fast)
            )
        if src is not None and mutation is None:
            fwd = two_coloring_to_listcol(inst, src)
            v.certificates_ok &= bool(
                validate(ListColoringInstance(inst.graph.graph, inst.lists, inst.palette), fwd)
            )
        verdicts.append(v)
    return _finish("appA", spec.describe(), verdicts, incomplete)


def enumerate_proper_colorings(g: Graph, k: int):
    """All proper k-colorings by DFS in vertex order (desk scale only)."""
    colors = [0] * g.n

    def rec(v):
        if v == g.n:
            yield tuple(colors)
            return
        forbidden = {colors[w] for w in g.adj[v] if w < v}
        for c in range(1, k + 1):
            if c not in forbidden:
                colors[v] = c
                yield from rec(v + 1)
        colors[v] = 0

    yield from rec(0)


def faik_check(b: BipartiteGraph) -> InstanceVerdict:
    """Every proper 3-coloring whose color classes all contain a b-vertex
    must make every vertex a b-vertex (diameter <= 3 required)."""
    d = diameter(b.graph)
    if d > 3:
        raise PreconditionError(f"diameter {d} exceeds 3")
    g = b.graph
    v = InstanceVerdict(0)
    examined = 0
    b_colorings = 0
    for colors in enumerate_proper_colorings(g, 3):
        examined += 1
        b_vertices = [
            u for u in range(g.n)
            if {colors[u]} | {colors[w] for w in g.adj[u]} == {1, 2, 3}
        ]
        classes_hit = {colors[u] for u in b_vertices}
        if classes_hit == {1, 2, 3}:
            b_colorings += 1
            if len(b_vertices) != g.n:
                v.structural_ok = False
                v.note = f"3-b-coloring {colors} is not a fall coloring"
                break
    v.source_answer = True
    v.target_answer = v.structural_ok
    if not v.note:
        v.note = f"examined={examined} b_colorings={b_colorings}"
    return v


def suite_faik(spec: CorpusSpec = CorpusSpec(count=300, max_n=12), mutation=None, deadline=None):
    rng = SplitMix64(spec.seed)
    items = [bipartition(cycle_graph(6)), complete_bipartite(3, 3)]
    for _ in range(spec.count):
        n = rng.randint(4, spec.max_n)
        d = 3 if n >= 4 else 2
        items.append(gen_bipartite(n, d, rng.next_u64()))
    verdicts = []
    incomplete = False
    for idx, b in enumerate(items):
        if _expired(deadline):
            incomplete = True
            break
        v = faik_check(b)
        v.index = idx
        verdicts.append(v)
    return _finish("faik", spec.describe(), verdicts, incomplete)


# ---------------------------------------------------------------------------
# hitting-set suite


def _families_upto(k: int, max_size: int):
    """All sets of at most ``max_size`` distinct palette subsets (the empty
    subset included: it makes the instance an immediate NO)."""
    subsets = [frozenset(c + 1 for c in range(k) if mask >> c & 1) for mask in range(1 << k)]
    for size in range(1, max_size + 1):
        yield from itertools.combinations(subsets, size)


_KAB_CACHE = {}


def _kab(a: int, b: int) -> BipartiteGraph:
    if (a, b) not in _KAB_CACHE:
        _KAB_CACHE[(a, b)] = complete_bipartite(a, b)
    return _KAB_CACHE[(a, b)]


def _family_instance_agrees(fam_a, fam_b, k: int) -> bool:
    """Hitting-set answer vs the generic list solver on the realized K_{a,b}."""
    b = _kab(len(fam_a), len(fam_b))
    lists = ListAssignment(list(fam_a) + list(fam_b))
    s = _oracle_chs(SetFamily(k, fam_a), SetFamily(k, fam_b), k)
    if any(not l for l in fam_a + fam_b):
        generic = None  # empty list: immediate NO for the coloring side
    else:
        generic = _oracle_listcol(b.graph, lists, k)
    if (s is None) != (generic is None):
        return False
    if s is not None:
        full = frozenset(range(1, k + 1))
        if any(not (s & f) for f in fam_a) or any(not ((full - s) & f) for f in fam_b):
            return False
        fast = _oracle_listcol_cb(b, lists, k)
        if fast is None or not validate(ListColoringInstance(b.graph, lists, k), fast):
            return False
    return True


def hitset_probe_growth(seed: int = 7, ks=(12, 13, 14, 15, 16), members: int = 100_000):
    """Timing probe: a NO instance with ``members`` family members whose
    per-candidate check fails within the first k+1 members, so runtime tracks
    the 2^k enumeration.  Returns (times, ratios, answer_is_none)."""
    times = {}
    answer_none = True
    for k in ks:
        rng = SplitMix64(seed + k)
        singles = [frozenset([c]) for c in range(1, k + 1)]
        rng.shuffle(singles)
        members_a = singles + [frozenset()]
        while len(members_a) < members * 6 // 10:
            c = rng.randint(1, k)
            members_a.append(frozenset([c, rng.randint(1, k)]))
        members_b = []
        while len(members_b) < members - len(members_a):
            members_b.append(frozenset([rng.randint(1, k)]))
        fam_a = SetFamily(k, members_a)
        fam_b = SetFamily(k, members_b)
        reps = max(1, 2 ** (max(ks) - k) // 4)
        best = None
        for _ in range(3):
            t0 = time.perf_counter()
            for _ in range(reps):
                out = complementary_hitting_sets(fam_a, fam_b, k)
            dt = (time.perf_counter() - t0) / reps
            best = dt if best is None else min(best, dt)
        answer_none &= out is None
        times[k] = best
    ratios = [times[ks[i + 1]] / times[ks[i]] for i in range(len(ks) - 1)]
    return times, ratios, answer_none


def hitset_probe_linear(seed: int = 7, k: int = 6, n: int = 20_000):
    """Timing probe: every candidate scans the whole first family (all-full
    members, one unhittable member last), so runtime tracks the member count."""
    times = {}
    for mult in (1, 2):
        members = [frozenset(range(1, k + 1))] * (n * mult - 1) + [frozenset()]
        fam_a = SetFamily(k, members)
        fam_b = SetFamily(k, [frozenset(range(1, k + 1))])
        best = None
        for _ in range(3):
            t0 = time.perf_counter()
            out = complementary_hitting_sets(fam_a, fam_b, k)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        assert out is None
        times[mult] = best
    return times[2] / times[1]


def suite_hitset(spec: CorpusSpec = CorpusSpec(seed=7), mutation=None, deadline=None,
                 exhaustive_parts: int = 4, exhaustive_k: int = 4,
                 random_k5: int = 500, run_probes: bool = False):
    """Hitting-set solver vs the generic list solver: exhaustive over distinct
    per-side list sets (parts <= 4, k <= 4), randomized at k = 5, plus the
    optional scaling probes."""
    verdicts = []
    incomplete = False
    idx = 0
    mismatch_budget = 5
    for k in range(1, exhaustive_k + 1):
        fams = list(_families_upto(k, exhaustive_parts))
        for ia in range(len(fams)):
            if _expired(deadline):
                incomplete = True
                break
            for ib in range(ia, len(fams)):
                if not _family_instance_agrees(fams[ia], fams[ib], k):
                    verdicts.append(
                        InstanceVerdict(idx, True, False, note=f"k={k} A={fams[ia]} B={fams[ib]}")
                    )
                    mismatch_budget -= 1
                    if mismatch_budget <= 0:
                        break
                idx += 1
            if mismatch_budget <= 0:
                break
        if incomplete or mismatch_budget <= 0:
            break
    exhaustive_count = idx
    rng = SplitMix64(spec.seed)
    for _ in range(random_k5):
        if _expired(deadline):
            incomplete = True
            break
        k = 5
        na, nb = rng.randint(1, 4), rng.randint(1, 4)
        fam_a = tuple(
            frozenset(c for c in range(1, k + 1) if rng.random() < 0.45) for _ in range(na)
        )
        fam_b = tuple(
            frozenset(c for c in range(1, k + 1) if rng.random() < 0.45) for _ in range(nb)
        )
        if not _family_instance_agrees(fam_a, fam_b, k):
            verdicts.append(InstanceVerdict(idx, True, False, note=f"k=5 A={fam_a} B={fam_b}"))
        idx += 1
    extra = [f"exhaustive-pairs {exhaustive_count}", f"random-k5 {random_k5}"]
    if run_probes and not incomplete:
        times, ratios, answer_none = hitset_probe_growth(spec.seed)
        growth_ok = answer_none and all(1.5 <= r <= 3.0 for r in ratios) and max(times.values()) <= 30.0
        linear_ratio = hitset_probe_linear(spec.seed)
        linear_ok = 1.4 <= linear_ratio <= 2.8
        extra.append(f"growth-probe {'pass' if growth_ok else 'fail'}")
        extra.append(f"linear-probe {'pass' if linear_ok else 'fail'}")
        if not growth_ok:
            verdicts.append(InstanceVerdict(idx, True, False, note=f"growth ratios {ratios}"))
        idx += 1
        if not linear_ok:
            verdicts.append(InstanceVerdict(idx, True, False, note=f"linear ratio {linear_ratio}"))
        idx += 1
    if not verdicts:
        verdicts.append(InstanceVerdict(0, True, True, note=f"checked={idx}"))
    return _finish("hitset", spec.describe(), verdicts, incomplete, extra)


# ---------------------------------------------------------------------------
# registry / entry points


_SUITES = {
    "prop1": suite_prop1,
    "thm7": suite_thm7,
    "cor3": suite_cor3,
    "lem7": suite_lem7,
    "cor8": suite_cor8,
    "cor9": suite_cor9,
    "flaw": suite_flaw,
    "prop10": suite_prop10,
    "prop12": suite_prop12,
    "thm13": suite_thm13,
    "appA": suite_appA,
    "faik": suite_faik,
    "hitset": suite_hitset,
}

_REDUCTION_TO_SUITE = {rid: rid for rid in REDUCTION_IDS}
_REDUCTION_TO_SUITE["fmps"] = "flaw"

# Small corpora that still trigger every registered mutation.
_MUTATION_SPECS = {
    "prop1": CorpusSpec(seed=3, count=6, max_n=6),
    "thm7": CorpusSpec(seed=3, count=2, max_n=4, max_m=2, include_hard=True),
    "cor3": CorpusSpec(seed=3, count=2, max_n=4, max_m=2, include_hard=True),
    "lem7": CorpusSpec(seed=3, count=6, include_hard=False),
    "cor9": CorpusSpec(seed=3, count=8),
    "prop10": CorpusSpec(seed=3, count=4, max_n=8),
    "prop12": CorpusSpec(seed=3, count=4, max_n=8),
    "thm13": CorpusSpec(seed=3, count=2, max_n=4, max_m=2, include_hard=True),
    "appA": CorpusSpec(seed=3, count=2, max_n=4, max_m=2, include_hard=True),
    "fmps": CorpusSpec(seed=3),
}


def check_equivalence(reduction_id: str, corpus: CorpusSpec = None, mutation=None,
                      deadline=None) -> EquivalenceReport:
    """Run the registered equivalence suite for one reduction."""
    if reduction_id not in _REDUCTION_TO_SUITE:
        raise InputError(f"unknown reduction {reduction_id!r}")
    if mutation is not None and mutation not in MUTATIONS[reduction_id]:
        raise InputError(f"unknown mutation {mutation!r} for {reduction_id}")
    suite = _SUITES[_REDUCTION_TO_SUITE[reduction_id]]
    kwargs = {"mutation": mutation, "deadline": deadline}
    if corpus is not None:
        kwargs["spec"] = corpus
    return suite(**kwargs)


def mutation_sensitivity(seed: int = 3, deadline=None) -> EquivalenceReport:
    """Every registered reduction must be caught by at least one mutation."""
    verdicts = []
    incomplete = False
    for idx, rid in enumerate(REDUCTION_IDS):
        if _expired(deadline):
            incomplete = True
            break
        caught = False
        for mut in MUTATIONS[rid]:
            spec = _MUTATION_SPECS[rid]
            if seed != 3:
                spec = CorpusSpec(**{**spec.__dict__, "seed": seed})
            report = check_equivalence(rid, spec, mutation=mut, deadline=deadline)
            if not report.passed:
                caught = True
                break
        verdicts.append(
            InstanceVerdict(idx, True, caught, note=f"{rid}:{'caught' if caught else 'MISSED'}")
        )
    return _finish("mutation", f"seed={seed}", verdicts, incomplete)


def _run_one(suite_id: str, seed: int, deadline):
    """One suite at its registered default scale; returns the report plus a
    snapshot of this process's oracle-coverage counters (for parallel runs)."""
    if suite_id == "mutation":
        report = mutation_sensitivity(deadline=deadline)
        return report, dict(coverage)
    spec = _default_spec(suite_id, seed)
    fn = _SUITES[suite_id]
    kwargs = {"deadline": deadline}
    if spec is not None:
        kwargs["spec"] = spec
    if suite_id == "hitset":
        kwargs["run_probes"] = True
    return fn(**kwargs), dict(coverage)


def run_suite(suite_id: str, seed: int = 1, budget=None, workers: int = 1) -> list:
    """Run one suite (or all of them) and return the reports.

    ``workers`` > 1 runs the suites of ``all`` in separate processes; report
    order is fixed by suite index regardless of completion order.
    """
    deadline = None if budget is None else time.monotonic() + budget
    if suite_id != "all":
        if suite_id not in _SUITES:
            raise InputError(f"unknown suite {suite_id!r}")
        return [_run_one(suite_id, seed, deadline)[0]]

    tasks = list(SUITE_IDS) + ["mutation"]
    reports = []
    if workers > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            futures = [pool.submit(_run_one, sid, seed, deadline) for sid in tasks]
            for fut in futures:
                report, cov = fut.result()
                coverage.update(cov)
                reports.append(report)
    else:
        for sid in tasks:
            reports.append(_run_one(sid, seed, deadline)[0])
    missing = _coverage_gaps()
    cov_verdict = InstanceVerdict(
        0, True, not missing,
        note="coverage ok" if not missing else f"missing {sorted(missing)}",
    )
    reports.append(_finish("coverage", "registered solvers and reductions", [cov_verdict], False))
    return reports


def _default_spec(suite_id: str, seed: int) -> CorpusSpec:
    defaults = {
        "prop1": CorpusSpec(seed=seed, count=100, max_n=10),
        "thm7": CorpusSpec(seed=seed, count=100, exhaustive_n=5, exhaustive_m=3),
        "cor3": CorpusSpec(seed=seed, count=40, max_n=6, max_m=3, exhaustive_n=4, exhaustive_m=2),
        "lem7": CorpusSpec(seed=seed, count=60),
        "cor8": CorpusSpec(seed=seed, count=20),
        "cor9": CorpusSpec(seed=seed, count=50),
        "flaw": CorpusSpec(seed=seed),
        "prop10": CorpusSpec(seed=seed, count=60, max_n=10),
        "prop12": CorpusSpec(seed=seed, count=80, max_n=12),
        "thm13": CorpusSpec(seed=seed, count=100, exhaustive_n=5, exhaustive_m=3),
        "appA": CorpusSpec(seed=seed, count=100, exhaustive_n=5, exhaustive_m=3),
        "faik": CorpusSpec(seed=seed, count=300, max_n=12),
        "hitset": CorpusSpec(seed=seed),
    }
    return defaults.get(suite_id)


_REQUIRED_COVERAGE = (
    "solve_h2col", "solve_preext", "solve_list_coloring", "solve_fall_coloring",
    "solve_biclique_partition", "complementary_hitting_sets", "listcol_complete_bipartite",
    "solve_list_hom:retraction", "solve_list_hom:edge_surjective",
    "solve_list_hom:vertex_surjective",
) + tuple(f"build:{rid}" for rid in REDUCTION_IDS)


def _coverage_gaps():
    return [key for key in _REQUIRED_COVERAGE if coverage[key] == 0]
