"""Graph containers and structural predicates.

Vertices are integers 0..n-1.  All containers are immutable after
construction and validate their invariants eagerly, so downstream code can
rely on adjacency being symmetric, loop-free, duplicate-free, and sorted.
"""

from __future__ import annotations

import itertools
from collections import deque

INF = float("inf")


class InputError(ValueError):
    """Malformed object or file: bad vertex ids, broken invariants, bad syntax."""


class PreconditionError(ValueError):
    """Structurally valid input that violates an operation's stated hypotheses."""


class Graph:
    """Simple undirected graph with per-vertex sorted neighbor lists."""

    __slots__ = ("n", "m", "adj", "_nbr")

    def __init__(self, n: int, edges):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        seen = set()
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(l)) for l in lists)
        self._nbr = tuple(frozenset(l) for l in lists)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def neighbors(self, u: int) -> frozenset:
        return self._nbr[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self):
        """Edges as (u, v) pairs with u < v, in ascending order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class BipartiteGraph:
    """A :class:`Graph` plus a total part labeling; every edge crosses parts.

    ``part_of[v]`` is ``"X"`` or ``"Y"``.
    """

    __slots__ = ("graph", "part_of")

    def __init__(self, graph: Graph, part_of):
        part_of = tuple(part_of)
        if len(part_of) != graph.n:
            raise InputError("part labeling must cover every vertex")
        if any(p not in ("X", "Y") for p in part_of):
            raise InputError("part labels must be 'X' or 'Y'")
        for u, v in graph.edges():
            if part_of[u] == part_of[v]:
                raise InputError(f"edge ({u},{v}) joins two {part_of[u]}-vertices")
        self.graph = graph
        self.part_of = part_of

    @property
    def n(self) -> int:
        return self.graph.n

    def x_vertices(self) -> tuple:
        return tuple(v for v in range(self.n) if self.part_of[v] == "X")

    def y_vertices(self) -> tuple:
        return tuple(v for v in range(self.n) if self.part_of[v] == "Y")

    def swap_parts(self) -> "BipartiteGraph":
        """Same graph with the X/Y labels exchanged."""
        flip = {"X": "Y", "Y": "X"}
        return BipartiteGraph(self.graph, tuple(flip[p] for p in self.part_of))

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteGraph)
            and self.graph == other.graph
            and self.part_of == other.part_of
        )

    def __hash__(self):
        return hash((self.graph, self.part_of))

    def __repr__(self):
        return f"BipartiteGraph(n={self.n}, m={self.graph.m}, |X|={len(self.x_vertices())})"


class Hypergraph3:
    """3-uniform hypergraph: every edge is an unordered triple of distinct vertices."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        canon = []
        seen = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise InputError(f"hyperedge {tuple(e)} is not a triple of distinct vertices")
            if not all(0 <= v < n for v in t):
                raise InputError(f"hyperedge {t} out of range for n={n}")
            if t in seen:
                raise InputError(f"duplicate hyperedge {t}")
            seen.add(t)
            canon.append(t)
        self.n = n
        self.edges = tuple(canon)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        return isinstance(other, Hypergraph3) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, m={self.m})"


class C6Embedding:
    """An induced 6-cycle (h1..h6) inside a bipartite host graph.

    Consecutive pairs (cyclically) are edges, the three diagonals h_i h_{i+3}
    are non-edges, the six vertices induce exactly the six cycle edges, and
    odd positions lie in one part while even positions lie in the other.
    """

    __slots__ = ("host", "cycle")

    def __init__(self, host: BipartiteGraph, cycle):
        cycle = tuple(cycle)
        if len(cycle) != 6 or len(set(cycle)) != 6:
            raise InputError("embedding needs six distinct vertices")
        if not all(0 <= v < host.n for v in cycle):
            raise InputError("embedding vertex out of range")
        g = host.graph
        for i in range(6):
            u, v = cycle[i], cycle[(i + 1) % 6]
            if not g.has_edge(u, v):
                raise InputError(f"consecutive pair ({u},{v}) is not an edge of the host")
        for i in range(3):
            u, v = cycle[i], cycle[i + 3]
            if g.has_edge(u, v):
                raise InputError(f"diagonal ({u},{v}) is an edge: cycle is not induced")
        induced = sum(
            1 for a, b in itertools.combinations(cycle, 2) if g.has_edge(a, b)
        )
        if induced != 6:
            raise InputError("the six vertices induce more than the cycle edges")
        parts = {host.part_of[cycle[i]] for i in (0, 2, 4)}
        if len(parts) != 1 or host.part_of[cycle[1]] in parts:
            raise InputError("cycle positions do not alternate between parts")
        self.host = host
        self.cycle = cycle

    def __eq__(self, other):
        return (
            isinstance(other, C6Embedding)
            and self.host == other.host
            and self.cycle == other.cycle
        )

    def __repr__(self):
        return f"C6Embedding(cycle={self.cycle})"


def canonical_cycle6(cycle) -> tuple:
    """Canonical form of a 6-cycle vertex sequence.

    Among the twelve rotations/reflections, keep the two that start at the
    minimum vertex and pick the lexicographically smaller.
    """
    cycle = tuple(cycle)
    i = cycle.index(min(cycle))
    fwd = tuple(cycle[(i + k) % 6] for k in range(6))
    bwd = tuple(cycle[(i - k) % 6] for k in range(6))
    return min(fwd, bwd)


def bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        d = dist[u] + 1
        for v in g.adj[u]:
            if dist[v] is INF:
                dist[v] = d
                q.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INF not in bfs_distances(g, 0)


def bipartition(g: Graph):
    """2-color ``g`` by BFS; None iff an odd cycle exists.

    For each connected component the component's minimum vertex goes to X,
    so in particular vertex 0 is always an X-vertex.
    """
    part = [None] * g.n
    for start in range(g.n):
        if part[start] is not None:
            continue
        part[start] = "X"
        q = deque([start])
        while q:
            u = q.popleft()
            opp = "Y" if part[u] == "X" else "X"
            for v in g.adj[u]:
                if part[v] is None:
                    part[v] = opp
                    q.append(v)
                elif part[v] == part[u]:
                    return None
    return BipartiteGraph(g, part)


def diameter(g: Graph):
    """Exact diameter via all-sources BFS; ``INF`` iff disconnected; 0 for n<=1."""
    if g.n <= 1:
        return 0
    best = 0
    for s in range(g.n):
        ecc = max(bfs_distances(g, s))
        if ecc is INF:
            return INF
        best = max(best, ecc)
    return best


def bipartite_complement(b: BipartiteGraph) -> BipartiteGraph:
    """Same parts, with exactly the cross-part non-edges as edges.  Involutive."""
    xs, ys = b.x_vertices(), b.y_vertices()
    g = b.graph
    edges = [(u, v) for u in xs for v in ys if not g.has_edge(u, v)]
    return BipartiteGraph(Graph(b.n, edges), b.part_of)


def enumerate_induced_c6(b: BipartiteGraph) -> list:
    """All induced 6-cycles of ``b``, one canonical embedding per vertex set.

    Cycles are discovered by walking simple paths from each anchor vertex
    (the cycle's minimum), deduplicated by canonical form, and returned in
    ascending canonical order.
    """
    g = b.graph
    found = {}
    for a in range(g.n):
        # Simple 6-paths a -> ... -> back to a, all intermediate vertices > a.
        stack = [(a, (a,))]
        while stack:
            u, path = stack.pop()
            if len(path) == 6:
                if a in g._nbr[u]:
                    canon = canonical_cycle6(path)
                    if canon not in found:
                        try:
                            found[canon] = C6Embedding(b, canon)
                        except InputError:
                            pass  # chorded: not induced
                continue
            for v in g.adj[u]:
                if v > a and v not in path:
                    stack.append((v, path + (v,)))
    return [found[k] for k in sorted(found)]


def dominates(g: Graph, s, t) -> bool:
    """True iff every vertex of ``t`` is in ``s`` or adjacent to a vertex of ``s``."""
    s = set(s)
    for v in set(t):
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    for v in s:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    return all(v in s or not s.isdisjoint(g._nbr[v]) for v in t)


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    """K_{a,b} with X = 0..a-1 and Y = a..a+b-1."""
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return BipartiteGraph(Graph(a + b, edges), ("X",) * a + ("Y",) * b)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
