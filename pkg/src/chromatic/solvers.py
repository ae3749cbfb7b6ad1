"""Exact, certificate-producing decision procedures.

Every solver is deterministic: fixed inputs yield the same certificate on
every run.  Search order is minimum-remaining-values with ties broken by
vertex index, and candidate values are tried in ascending order.  The fall
coloring solver branches on colors per vertex in plain index order instead.

``validate`` re-checks any certificate against its instance from the
definitions alone, independently of how the certificate was produced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graphs import BipartiteGraph, Graph, Hypergraph3, InputError, PreconditionError

MODES = ("plain", "vertex_surjective", "edge_surjective")


# ---------------------------------------------------------------------------
# certificate payloads


class ListAssignment:
    """Per-vertex finite sets of positive integer colors."""

    __slots__ = ("lists",)

    def __init__(self, lists):
        lists = tuple(frozenset(l) for l in lists)
        for v, l in enumerate(lists):
            if any(not isinstance(c, int) or c < 1 for c in l):
                raise InputError(f"list of vertex {v} contains a non-positive color")
        self.lists = lists

    @classmethod
    def full(cls, n: int, k: int) -> "ListAssignment":
        return cls([range(1, k + 1)] * n)

    @classmethod
    def from_precoloring(cls, n: int, k: int, p: "PartialColoring") -> "ListAssignment":
        """Singleton lists on precolored vertices, the full palette elsewhere."""
        full = frozenset(range(1, k + 1))
        return cls([
            frozenset([p.assignments[v]]) if v in p.assignments else full
            for v in range(n)
        ])

    def __getitem__(self, v: int) -> frozenset:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)

    def __iter__(self):
        return iter(self.lists)

    def __eq__(self, other):
        return isinstance(other, ListAssignment) and self.lists == other.lists

    def __hash__(self):
        return hash(self.lists)

    def __repr__(self):
        return f"ListAssignment({[sorted(l) for l in self.lists]})"


class PartialColoring:
    """A proper coloring of some vertex subset; properness is checked on use."""

    __slots__ = ("assignments",)

    def __init__(self, assignments: dict):
        assignments = dict(assignments)
        for v, c in assignments.items():
            if not isinstance(c, int) or c < 1:
                raise InputError(f"vertex {v} precolored with non-positive color {c}")
        self.assignments = assignments

    def domain(self) -> frozenset:
        return frozenset(self.assignments)

    def is_proper_on(self, g: Graph) -> bool:
        for v, c in self.assignments.items():
            for w in g.adj[v]:
                if self.assignments.get(w) == c:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, PartialColoring) and self.assignments == other.assignments

    def __repr__(self):
        return f"PartialColoring({dict(sorted(self.assignments.items()))})"


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color (1-based); index in ``colors`` is the vertex."""

    colors: tuple

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def color_class(self, c: int) -> frozenset:
        return frozenset(v for v, col in enumerate(self.colors) if col == c)

    def used(self) -> frozenset:
        return frozenset(self.colors)


@dataclass(frozen=True)
class VertexMapping:
    """Total map V(source) -> V(target); structural properties live in validate."""

    source: Graph
    target: Graph
    images: tuple

    def __getitem__(self, v: int) -> int:
        return self.images[v]


@dataclass(frozen=True)
class BicliquePartition:
    blocks: tuple  # of frozensets of vertices


# ---------------------------------------------------------------------------
# instance descriptors (the "instance" side of validate)


@dataclass(frozen=True)
class ListColoringInstance:
    g: Graph
    lists: ListAssignment
    k: int


@dataclass(frozen=True)
class PreExtInstance:
    g: Graph
    k: int
    precoloring: PartialColoring


@dataclass(frozen=True)
class FallColoringInstance:
    g: Graph
    k: int


@dataclass(frozen=True)
class H2ColInstance:
    h: Hypergraph3


@dataclass(frozen=True)
class BicliquePartitionInstance:
    b: BipartiteGraph
    k: int


@dataclass(frozen=True)
class HomInstance:
    """Homomorphism certificate contract.

    ``lists`` restricts images per source vertex; ``mode`` adds a
    surjectivity requirement; ``fixed`` lists vertices the mapping must fix
    pointwise (the retraction contract, with target a subgraph of source).
    """

    g: Graph
    h: Graph
    lists: tuple = None
    mode: str = "plain"
    fixed: tuple = None


@dataclass(frozen=True)
class Verdict:
    ok: bool
    condition: str = None
    witness: tuple = None

    def __bool__(self) -> bool:
        return self.ok

    def message(self) -> str:
        if self.ok:
            return "ok"
        return f"violated {self.condition} at {self.witness}"


# ---------------------------------------------------------------------------
# list homomorphism solver


@lru_cache(maxsize=64)
def _orbit_reps_mask(h: Graph) -> int:
    """Bitmask of one representative vertex per automorphism orbit of ``h``.

    Brute force over all permutations; only used for small targets, and only
    to shrink the root vertex's domain when every list is full (composing a
    solution with a target automorphism preserves homomorphism, vertex- and
    edge-surjectivity alike).
    """
    n = h.n
    if n == 0:
        return 0
    edges = set(h.edges())
    orbit = list(range(n))

    def find(a):
        while orbit[a] != a:
            orbit[a] = orbit[orbit[a]]
            a = orbit[a]
        return a

    for perm in itertools.permutations(range(n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in edges):
            for v in range(n):
                ra, rb = find(v), find(perm[v])
                if ra != rb:
                    orbit[max(ra, rb)] = min(ra, rb)
    mask = 0
    for v in range(n):
        if find(v) == v:
            mask |= 1 << v
    return mask


def solve_list_hom(g: Graph, h: Graph, lists=None, mode: str = "plain"):
    """Edge-respecting map g -> h within per-vertex lists, or None.

    ``mode`` requires nothing extra (``plain``), every target vertex hit
    (``vertex_surjective``), or every target edge realized by some source
    edge (``edge_surjective``).  Retraction instances are expressed through
    singleton lists on the embedded copy of the target.
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    hn = h.n
    full = (1 << hn) - 1

    if lists is None:
        doms = [full] * g.n
        all_full = True
    else:
        if len(lists) != g.n:
            raise InputError("lists must cover every source vertex")
        doms = []
        all_full = True
        for v in range(g.n):
            mask = 0
            for x in lists[v]:
                if not (0 <= x < hn):
                    raise InputError(f"list of vertex {v} references non-vertex {x} of the target")
                mask |= 1 << x
            doms.append(mask)
            if mask != full:
                all_full = False

    if all_full and g.n > 0 and 0 < hn <= 8:
        doms[0] = _orbit_reps_mask(h)

    nbr_mask = [0] * hn
    for x in range(hn):
        for y in h.adj[x]:
            nbr_mask[x] |= 1 << y
    support_cache = {0: 0}

    def support(dmask: int) -> int:
        s = support_cache.get(dmask)
        if s is None:
            low = dmask & -dmask
            s = support(dmask ^ low) | nbr_mask[low.bit_length() - 1]
            support_cache[dmask] = s
        return s

    hedges = tuple(h.edges())
    gedges = tuple(g.edges())
    all_hedges = (1 << len(hedges)) - 1

    pair_cache = {}

    def pair_support(du: int, dv: int) -> int:
        s = pair_cache.get((du, dv))
        if s is None:
            s = 0
            for i, (x, y) in enumerate(hedges):
                bx, by = 1 << x, 1 << y
                if (du & bx and dv & by) or (du & by and dv & bx):
                    s |= 1 << i
            pair_cache[(du, dv)] = s
        return s

    vertex_mode = mode == "vertex_surjective"
    edge_mode = mode == "edge_surjective"

    def coverage_fail() -> bool:
        """Some required target vertex/edge no longer has any support."""
        if vertex_mode:
            seen = 0
            for d in doms:
                seen |= d
                if seen == full:
                    return False
            return seen != full
        if edge_mode:
            seen = 0
            for u, v in gedges:
                seen |= pair_support(doms[u], doms[v])
                if seen == all_hedges:
                    return False
            return seen != all_hedges
        return False

    trail = []

    def set_dom(v: int, new: int) -> None:
        trail.append((v, doms[v]))
        doms[v] = new

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            v, old = trail.pop()
            doms[v] = old

    def propagate(queue: list) -> bool:
        while queue:
            u = queue.pop()
            su = support(doms[u])
            for v in g.adj[u]:
                nd = doms[v] & su
                if nd != doms[v]:
                    if nd == 0:
                        return False
                    set_dom(v, nd)
                    queue.append(v)
        return True

    if any(d == 0 for d in doms):
        return None
    if not propagate(list(range(g.n))) or coverage_fail():
        return None

    def extract():
        images = tuple(d.bit_length() - 1 for d in doms)
        return VertexMapping(source=g, target=h, images=images)

    def pick():
        best, best_count = -1, hn + 1
        for v in range(g.n):
            c = doms[v].bit_count()
            if 1 < c < best_count:
                best, best_count = v, c
        return best

    frames = []
    while True:
        best = pick()
        if best == -1:
            return extract()
        vals = []
        m = doms[best]
        while m:
            low = m & -m
            vals.append(low)
            m ^= low
        frames.append([best, vals, 0, len(trail)])
        while True:
            if not frames:
                return None
            fr = frames[-1]
            undo_to(fr[3])
            if fr[2] == len(fr[1]):
                frames.pop()
                continue
            bit = fr[1][fr[2]]
            fr[2] += 1
            set_dom(fr[0], bit)
            if propagate([fr[0]]) and not coverage_fail():
                break


def retract_to_cycle(b: BipartiteGraph, cycle):
    """Retraction of the host onto an embedded 6-cycle, or None.

    Solved as a list homomorphism to the abstract 6-cycle with singleton
    lists pinning the embedded copy; the certificate maps host vertices to
    cycle vertices and fixes the cycle pointwise.
    """
    from .graphs import cycle_graph

    cycle = tuple(cycle)
    target = cycle_graph(6)
    pins = {v: i for i, v in enumerate(cycle)}
    lists = [
        frozenset([pins[v]]) if v in pins else frozenset(range(6))
        for v in range(b.n)
    ]
    found = solve_list_hom(b.graph, target, lists)
    if found is None:
        return None
    images = tuple(cycle[i] for i in found.images)
    return VertexMapping(source=b.graph, target=b.graph, images=images)


# ---------------------------------------------------------------------------
# list coloring (2-SAT fast path + backtracking)


def _lists_as_assignment(lists, n: int) -> ListAssignment:
    if isinstance(lists, ListAssignment):
        if len(lists) != n:
            raise InputError("list assignment does not cover every vertex")
        return lists
    return ListAssignment(lists)


def _tarjan_scc(succ: list) -> list:
    """Component id per node; ids are assigned in reverse topological order."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack = []
    counter = 0
    comp_count = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(succ[v])):
                w = succ[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comp


def _solve_lists_2sat(g: Graph, lists: ListAssignment):
    """Implication-graph decision for instances where every list has size <= 2."""
    choices = []
    for v in range(g.n):
        l = sorted(lists[v])
        if not l:
            return None
        if len(l) > 2:
            raise InputError("2-SAT path requires lists of size at most 2")
        choices.append(l)

    # Node 2v encodes "v takes choices[v][0]", node 2v+1 its negation.
    succ = [[] for _ in range(2 * g.n)]

    def add_implication(a: int, b: int) -> None:
        succ[a].append(b)

    for v in range(g.n):
        if len(choices[v]) == 1:
            add_implication(2 * v + 1, 2 * v)  # unit clause: first choice forced
    for u, v in g.edges():
        for i, cu in enumerate(choices[u]):
            for j, cv in enumerate(choices[v]):
                if cu == cv:
                    # not (u takes i and v takes j)
                    u_lit = 2 * u + i
                    v_lit = 2 * v + j
                    add_implication(u_lit, v_lit ^ 1)
                    add_implication(v_lit, u_lit ^ 1)

    comp = _tarjan_scc(succ)
    colors = []
    for v in range(g.n):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        take_first = comp[2 * v] < comp[2 * v + 1]
        colors.append(choices[v][0] if take_first else choices[v][1])
    return Coloring(tuple(colors))


def _solve_lists_backtracking(g: Graph, lists: ListAssignment, k: int):
    """MRV backtracking with forward checking over color bitmasks."""
    doms = []
    for v in range(g.n):
        mask = 0
        for c in lists[v]:
            mask |= 1 << (c - 1)
        doms.append(mask)
    if any(d == 0 for d in doms):
        return None

    assigned = [False] * g.n
    trail = []

    def assign(v: int, bit: int) -> bool:
        assigned[v] = True
        trail.append(("a", v, doms[v]))
        doms[v] = bit
        for w in g.adj[v]:
            if not assigned[w] and doms[w] & bit:
                trail.append(("d", w, doms[w]))
                doms[w] &= ~bit
                if doms[w] == 0:
                    return False
        return True

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            tag, v, old = trail.pop()
            doms[v] = old
            if tag == "a":
                assigned[v] = False

    frames = []
    while True:
        best, best_count = -1, k + 2
        for v in range(g.n):
            if not assigned[v]:
                c = doms[v].bit_count()
                if c < best_count:
                    best, best_count = v, c
        if best == -1:
            return Coloring(tuple(d.bit_length() for d in doms))
        vals = []
        m = doms[best]
        while m:
            low = m & -m
            vals.append(low)
            m ^= low
        frames.append([best, vals, 0, len(trail)])
        while True:
            if not frames:
                return None
            fr = frames[-1]
            undo_to(fr[3])
            if fr[2] == len(fr[1]):
                frames.pop()
                continue
            bit = fr[1][fr[2]]
            fr[2] += 1
            if assign(fr[0], bit):
                break


def solve_list_coloring(g: Graph, lists, k: int):
    """Proper coloring respecting the lists, or None.

    Instances whose lists all have size at most 2 go through the polynomial
    implication-graph path; everything else is MRV backtracking with
    forward checking.
    """
    lists = _lists_as_assignment(lists, g.n)
    for v in range(g.n):
        if any(c > k for c in lists[v]):
            raise InputError(f"list of vertex {v} exceeds the palette [{k}]")
    if all(len(lists[v]) <= 2 for v in range(g.n)):
        return _solve_lists_2sat(g, lists)
    return _solve_lists_backtracking(g, lists, k)


def solve_preext(g: Graph, k: int, p: PartialColoring):
    """Extension of the partial coloring to a proper k-coloring, or None."""
    for v in p.assignments:
        if not (0 <= v < g.n):
            raise InputError(f"precolored vertex {v} out of range")
    for v, c in p.assignments.items():
        if c > k:
            raise PreconditionError(f"vertex {v} precolored outside the palette [{k}]")
    if not p.is_proper_on(g):
        raise PreconditionError("precoloring is not proper on its domain")
    return solve_list_coloring(g, ListAssignment.from_precoloring(g.n, k, p), k)


# ---------------------------------------------------------------------------
# fall coloring


def _b_feasible(g: Graph, colors: list, k: int, v: int) -> bool:
    """Can N[v] still see all k colors?  Over-approximates, so safe to prune on.

    Missing colors must be coverable by distinct uncolored members of N[v],
    each restricted to colors not already taken by its own neighbors.
    """
    present = 0
    uncolored = []
    for w in (v, *g.adj[v]):
        c = colors[w]
        if c:
            present |= 1 << (c - 1)
        else:
            uncolored.append(w)
    needed = ((1 << k) - 1) & ~present
    if needed == 0:
        return True
    possible = []
    for w in uncolored:
        mask = (1 << k) - 1
        for x in g.adj[w]:
            if colors[x]:
                mask &= ~(1 << (colors[x] - 1))
        possible.append(mask)

    def match(need: int, avail: list) -> bool:
        if need == 0:
            return True
        low = need & -need
        for i, mask in enumerate(avail):
            if mask & low and match(need ^ low, avail[:i] + avail[i + 1 :]):
                return True
        return False

    return match(needed, possible)


def solve_fall_coloring(g: Graph, k: int):
    """Proper k-coloring in which every closed neighborhood sees all k colors.

    Backtracking over vertices in index order with colors ascending; a
    branch dies as soon as some vertex can no longer become a b-vertex.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    if any(g.degree(v) < k - 1 for v in range(g.n)):
        return None
    colors = [0] * g.n

    def feasible_after(v: int) -> bool:
        # Recheck everything within distance 2 of v; farther vertices are
        # unaffected by this assignment.
        closed = {v, *g.adj[v]}
        for w in tuple(closed):
            closed.update(g.adj[w])
        return all(_b_feasible(g, colors, k, w) for w in closed)

    def search(v: int) -> bool:
        if v == g.n:
            return True
        forbidden = 0
        for w in g.adj[v]:
            if colors[w]:
                forbidden |= 1 << (colors[w] - 1)
        for c in range(1, k + 1):
            if forbidden & (1 << (c - 1)):
                continue
            colors[v] = c
            if feasible_after(v) and search(v + 1):
                return True
            colors[v] = 0
        return False

    if g.n == 0:
        return Coloring(())
    return Coloring(tuple(colors)) if search(0) else None


# ---------------------------------------------------------------------------
# biclique partition


def solve_biclique_partition(b: BipartiteGraph, k: int):
    """Partition of the vertices into at most k bicliques, or None.

    Vertices are assigned to blocks in index order with restricted-growth
    block ids; a vertex may only join a block whose opposite-part members
    are all its neighbors, and every used block must end up with both parts
    populated (a biclique contains an edge).
    """
    if k < 0:
        raise InputError("k must be non-negative")
    g = b.graph
    n = g.n
    if n == 0:
        return BicliquePartition(())
    block_of = [-1] * n
    members: list[list[int]] = []

    def compatible(v: int, blk: int) -> bool:
        pv = b.part_of[v]
        return all(
            b.part_of[w] == pv or g.has_edge(v, w) for w in members[blk]
        )

    def one_sided_blocks() -> int:
        bad = 0
        for blk in members:
            parts = {b.part_of[w] for w in blk}
            if len(parts) == 1:
                bad += 1
        return bad

    def search(v: int) -> bool:
        if v == n:
            return one_sided_blocks() == 0
        if one_sided_blocks() > n - v:
            return False
        used = len(members)
        for blk in range(min(used + 1, k)):
            if blk == used:
                members.append([v])
                block_of[v] = blk
                if search(v + 1):
                    return True
                members.pop()
                block_of[v] = -1
            elif compatible(v, blk):
                members[blk].append(v)
                block_of[v] = blk
                if search(v + 1):
                    return True
                members[blk].pop()
                block_of[v] = -1
        return False

    if not search(0):
        return None
    return BicliquePartition(tuple(frozenset(blk) for blk in members))


# ---------------------------------------------------------------------------
# 3-uniform hypergraph 2-coloring


def solve_h2col(h: Hypergraph3):
    """2-coloring with no monochromatic triple, or None.

    Exhaustive search with unit propagation: two same-colored vertices of a
    triple force the third to the other color.
    """
    colors = [0] * h.n
    incident = [[] for _ in range(h.n)]
    for idx, e in enumerate(h.edges):
        for v in e:
            incident[v].append(idx)

    trail = []

    def assign(v: int, c: int) -> bool:
        colors[v] = c
        trail.append(v)
        queue = [v]
        while queue:
            u = queue.pop()
            for idx in incident[u]:
                a, b_, c_ = h.edges[idx]
                vals = (colors[a], colors[b_], colors[c_])
                if 0 not in vals:
                    if vals[0] == vals[1] == vals[2]:
                        return False
                    continue
                known = [x for x in vals if x]
                if len(known) == 2 and known[0] == known[1]:
                    for w in (a, b_, c_):
                        if colors[w] == 0:
                            colors[w] = 3 - known[0]
                            trail.append(w)
                            queue.append(w)
        return True

    def undo_to(mark: int) -> None:
        while len(trail) > mark:
            colors[trail.pop()] = 0

    def search() -> bool:
        v = next((u for u in range(h.n) if colors[u] == 0), None)
        if v is None:
            return True
        for c in (1, 2):
            mark = len(trail)
            if assign(v, c) and search():
                return True
            undo_to(mark)
        return False

    return Coloring(tuple(colors)) if search() else None


# ---------------------------------------------------------------------------
# validate


def _check_proper(g: Graph, colors) -> Verdict:
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return Verdict(False, "proper", (u, v))
    return Verdict(True)


def _validate_coloring(inst, cert: Coloring) -> Verdict:
    g = inst.g
    if len(cert.colors) != g.n:
        return Verdict(False, "total", (len(cert.colors), g.n))
    for v, c in enumerate(cert.colors):
        if not (1 <= c <= inst.k):
            return Verdict(False, "colors_in_palette", (v, c))
    proper = _check_proper(g, cert.colors)
    if not proper:
        return proper
    if isinstance(inst, ListColoringInstance):
        for v in range(g.n):
            if cert.colors[v] not in inst.lists[v]:
                return Verdict(False, "respects_lists", (v, cert.colors[v]))
    if isinstance(inst, PreExtInstance):
        for v, c in sorted(inst.precoloring.assignments.items()):
            if cert.colors[v] != c:
                return Verdict(False, "extends_precoloring", (v, cert.colors[v], c))
    if isinstance(inst, FallColoringInstance):
        palette = frozenset(range(1, inst.k + 1))
        for v in range(g.n):
            seen = {cert.colors[v]} | {cert.colors[w] for w in g.adj[v]}
            if seen != palette:
                return Verdict(False, "b_vertex", (v,))
    return Verdict(True)


def _validate_h2col(inst: H2ColInstance, cert: Coloring) -> Verdict:
    h = inst.h
    if len(cert.colors) != h.n:
        return Verdict(False, "total", (len(cert.colors), h.n))
    for v, c in enumerate(cert.colors):
        if c not in (1, 2):
            return Verdict(False, "colors_in_palette", (v, c))
    for e in h.edges:
        if len({cert.colors[v] for v in e}) == 1:
            return Verdict(False, "hyperedge_bichromatic", e)
    return Verdict(True)


def _validate_mapping(inst: HomInstance, cert: VertexMapping) -> Verdict:
    g, h = inst.g, inst.h
    if len(cert.images) != g.n:
        return Verdict(False, "total", (len(cert.images), g.n))
    for v, x in enumerate(cert.images):
        if not (0 <= x < h.n):
            return Verdict(False, "images_in_target", (v, x))
    for u, v in g.edges():
        if not h.has_edge(cert.images[u], cert.images[v]):
            return Verdict(False, "respects_edges", (u, v))
    if inst.lists is not None:
        for v in range(g.n):
            if cert.images[v] not in inst.lists[v]:
                return Verdict(False, "respects_lists", (v, cert.images[v]))
    if inst.fixed is not None:
        for v in inst.fixed:
            if cert.images[v] != v:
                return Verdict(False, "fixes_subgraph", (v, cert.images[v]))
    if inst.mode == "vertex_surjective":
        hit = set(cert.images)
        for x in range(h.n):
            if x not in hit:
                return Verdict(False, "vertex_surjective", (x,))
    elif inst.mode == "edge_surjective":
        realized = {frozenset((cert.images[u], cert.images[v])) for u, v in g.edges()}
        for x, y in h.edges():
            if frozenset((x, y)) not in realized:
                return Verdict(False, "edge_surjective", (x, y))
    return Verdict(True)


def _validate_partition(inst: BicliquePartitionInstance, cert: BicliquePartition) -> Verdict:
    b, g = inst.b, inst.b.graph
    if len(cert.blocks) > inst.k:
        return Verdict(False, "block_count", (len(cert.blocks), inst.k))
    seen = set()
    for i, blk in enumerate(cert.blocks):
        if not blk:
            return Verdict(False, "block_nonempty", (i,))
        if blk & seen:
            return Verdict(False, "blocks_disjoint", (i,))
        seen |= blk
    if seen != set(range(g.n)):
        missing = min(set(range(g.n)) - seen)
        return Verdict(False, "blocks_cover", (missing,))
    for i, blk in enumerate(cert.blocks):
        xs = sorted(v for v in blk if b.part_of[v] == "X")
        ys = sorted(v for v in blk if b.part_of[v] == "Y")
        if not xs or not ys:
            return Verdict(False, "block_has_edge", (i,))
        for u in xs:
            for v in ys:
                if not g.has_edge(u, v):
                    return Verdict(False, "block_biclique", (i, u, v))
    return Verdict(True)


def validate(instance, certificate) -> Verdict:
    """Check a certificate against its instance; names the first violation.

    Raises :class:`InputError` when the certificate kind does not match the
    instance kind.
    """
    if isinstance(instance, (ListColoringInstance, PreExtInstance, FallColoringInstance)):
        if not isinstance(certificate, Coloring):
            raise InputError("instance expects a Coloring certificate")
        return _validate_coloring(instance, certificate)
    if isinstance(instance, H2ColInstance):
        if not isinstance(certificate, Coloring):
            raise InputError("instance expects a Coloring certificate")
        return _validate_h2col(instance, certificate)
    if isinstance(instance, HomInstance):
        if not isinstance(certificate, VertexMapping):
            raise InputError("instance expects a VertexMapping certificate")
        return _validate_mapping(instance, certificate)
    if isinstance(instance, BicliquePartitionInstance):
        if not isinstance(certificate, BicliquePartition):
            raise InputError("instance expects a BicliquePartition certificate")
        return _validate_partition(instance, certificate)
    raise InputError(f"unknown instance kind {type(instance).__name__}")
