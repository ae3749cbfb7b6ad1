"""Line-oriented text formats for graphs, hypergraphs, lists, and certificates.

All files are 1-based (DIMACS convention); in-memory objects are 0-based.
Formats:

  graph        ``p edge <n> <m>`` header, then ``e <u> <v>`` lines.
               Bipartite graphs add ``x <u>`` lines listing the X part.
  hypergraph   ``p h3 <n> <m>`` header, then ``h <a> <b> <c>`` lines.
  lists        ``l <v> <c1> <c2> ...`` lines.
  precoloring  ``pc <v> <c>`` lines.
  mapping      ``m <v> <image>`` lines (colorings and vertex mappings).
  partition    ``blk <i> <v1> <v2> ...`` lines.
  families     ``p chs <k> <|A|> <|B|>`` header, then ``A <c1> ...`` and
               ``B <c1> ...`` lines.
  sidecar      ``c6 <h1> ... <h6>`` line naming an embedded cycle, plus
               optional ``name <index> <label>`` lines.

Lines starting with ``c`` are comments.
"""

from __future__ import annotations

from .graphs import BipartiteGraph, Graph, Hypergraph3, InputError, bipartition


def _data_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        yield line.split()


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"bad {what}: {tok!r}") from None


def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for parts in _data_lines(text):
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"bad header: {' '.join(parts)}")
            n, m = _int(parts[2], "vertex count"), _int(parts[3], "edge count")
        elif parts[0] == "e":
            if len(parts) != 3:
                raise InputError(f"bad edge line: {' '.join(parts)}")
            edges.append((_int(parts[1], "vertex") - 1, _int(parts[2], "vertex") - 1))
        elif parts[0] in ("x",):
            continue  # part labels handled by parse_bipartite
        else:
            raise InputError(f"unexpected line: {' '.join(parts)}")
    if n is None:
        raise InputError("missing 'p edge' header")
    g = Graph(n, edges)
    if m is not None and g.m != m:
        raise InputError(f"header announces {m} edges, file has {g.m}")
    return g


def parse_bipartite(text: str) -> BipartiteGraph:
    """Bipartite graph from text; with no ``x`` lines the parts are derived by BFS."""
    g = parse_graph(text)
    xs = set()
    saw_x = False
    for parts in _data_lines(text):
        if parts[0] == "x":
            saw_x = True
            for tok in parts[1:]:
                xs.add(_int(tok, "vertex") - 1)
    if not saw_x:
        b = bipartition(g)
        if b is None:
            raise InputError("graph is not bipartite and no 'x' lines were given")
        return b
    part = tuple("X" if v in xs else "Y" for v in range(g.n))
    return BipartiteGraph(g, part)


def write_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_bipartite(b: BipartiteGraph) -> str:
    body = write_graph(b.graph)
    xs = " ".join(str(v + 1) for v in b.x_vertices())
    return body + (f"x {xs}\n" if xs else "")


def parse_hypergraph(text: str) -> Hypergraph3:
    n = None
    m = None
    edges = []
    for parts in _data_lines(text):
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "h3":
                raise InputError(f"bad header: {' '.join(parts)}")
            n, m = _int(parts[2], "vertex count"), _int(parts[3], "edge count")
        elif parts[0] == "h":
            if len(parts) != 4:
                raise InputError(f"bad hyperedge line: {' '.join(parts)}")
            edges.append(tuple(_int(t, "vertex") - 1 for t in parts[1:]))
        else:
            raise InputError(f"unexpected line: {' '.join(parts)}")
    if n is None:
        raise InputError("missing 'p h3' header")
    h = Hypergraph3(n, edges)
    if m is not None and h.m != m:
        raise InputError(f"header announces {m} hyperedges, file has {h.m}")
    return h


def write_hypergraph(h: Hypergraph3) -> str:
    lines = [f"p h3 {h.n} {h.m}"]
    lines += [f"h {a + 1} {b + 1} {c + 1}" for a, b, c in h.edges]
    return "\n".join(lines) + "\n"


def parse_lists(text: str, n: int) -> tuple:
    """Per-vertex color sets; vertices without an ``l`` line get an empty set."""
    lists = [frozenset()] * n
    for parts in _data_lines(text):
        if parts[0] != "l":
            raise InputError(f"unexpected line: {' '.join(parts)}")
        v = _int(parts[1], "vertex") - 1
        if not (0 <= v < n):
            raise InputError(f"list for out-of-range vertex {v + 1}")
        lists[v] = frozenset(_int(t, "color") for t in parts[2:])
    return tuple(lists)


def write_lists(lists) -> str:
    lines = []
    for v, l in enumerate(lists):
        lines.append(f"l {v + 1} " + " ".join(str(c) for c in sorted(l)))
    return "\n".join(lines) + "\n"


def parse_precoloring(text: str, n: int) -> dict:
    assignment = {}
    for parts in _data_lines(text):
        if parts[0] != "pc" or len(parts) != 3:
            raise InputError(f"unexpected line: {' '.join(parts)}")
        v = _int(parts[1], "vertex") - 1
        if not (0 <= v < n):
            raise InputError(f"precolor for out-of-range vertex {v + 1}")
        if v in assignment:
            raise InputError(f"vertex {v + 1} precolored twice")
        assignment[v] = _int(parts[2], "color")
    return assignment


def write_precoloring(assignment: dict) -> str:
    lines = [f"pc {v + 1} {c}" for v, c in sorted(assignment.items())]
    return "\n".join(lines) + "\n" if lines else ""


def parse_mapping(text: str, n: int) -> tuple:
    """Total map vertex -> 1-based image, returned as a 0-based-index tuple of ints."""
    images = [None] * n
    for parts in _data_lines(text):
        if parts[0] != "m" or len(parts) != 3:
            raise InputError(f"unexpected line: {' '.join(parts)}")
        v = _int(parts[1], "vertex") - 1
        if not (0 <= v < n):
            raise InputError(f"mapping for out-of-range vertex {v + 1}")
        images[v] = _int(parts[2], "image")
    if any(i is None for i in images):
        missing = images.index(None)
        raise InputError(f"vertex {missing + 1} has no image")
    return tuple(images)


def write_mapping(images) -> str:
    lines = [f"m {v + 1} {img}" for v, img in enumerate(images)]
    return "\n".join(lines) + "\n"


def parse_partition(text: str, n: int) -> tuple:
    blocks = {}
    for parts in _data_lines(text):
        if parts[0] != "blk":
            raise InputError(f"unexpected line: {' '.join(parts)}")
        i = _int(parts[1], "block index")
        members = frozenset(_int(t, "vertex") - 1 for t in parts[2:])
        if any(not (0 <= v < n) for v in members):
            raise InputError(f"block {i} has an out-of-range vertex")
        blocks[i] = members
    return tuple(blocks[i] for i in sorted(blocks))


def write_partition(blocks) -> str:
    lines = []
    for i, blk in enumerate(blocks, start=1):
        lines.append(f"blk {i} " + " ".join(str(v + 1) for v in sorted(blk)))
    return "\n".join(lines) + "\n"


def parse_families(text: str):
    """Returns (k, A_members, B_members) with members as frozensets of colors."""
    k = None
    na = nb = None
    fam_a, fam_b = [], []
    for parts in _data_lines(text):
        if parts[0] == "p":
            if len(parts) != 5 or parts[1] != "chs":
                raise InputError(f"bad header: {' '.join(parts)}")
            k = _int(parts[2], "palette size")
            na, nb = _int(parts[3], "family size"), _int(parts[4], "family size")
        elif parts[0] == "A":
            fam_a.append(frozenset(_int(t, "color") for t in parts[1:]))
        elif parts[0] == "B":
            fam_b.append(frozenset(_int(t, "color") for t in parts[1:]))
        else:
            raise InputError(f"unexpected line: {' '.join(parts)}")
    if k is None:
        raise InputError("missing 'p chs' header")
    if (na is not None and na != len(fam_a)) or (nb is not None and nb != len(fam_b)):
        raise InputError("family sizes do not match the header")
    return k, tuple(fam_a), tuple(fam_b)


def write_families(k: int, fam_a, fam_b) -> str:
    lines = [f"p chs {k} {len(fam_a)} {len(fam_b)}"]
    for f in fam_a:
        lines.append("A " + " ".join(str(c) for c in sorted(f)))
    for f in fam_b:
        lines.append("B " + " ".join(str(c) for c in sorted(f)))
    return "\n".join(lines) + "\n"


def parse_sidecar(text: str):
    """Returns (cycle6 or None, {index: label}) from a metadata sidecar."""
    cycle = None
    names = {}
    for parts in _data_lines(text):
        if parts[0] == "c6":
            if len(parts) != 7:
                raise InputError("c6 line needs six vertices")
            cycle = tuple(_int(t, "vertex") - 1 for t in parts[1:])
        elif parts[0] == "name":
            names[_int(parts[1], "index") - 1] = parts[2]
        else:
            raise InputError(f"unexpected line: {' '.join(parts)}")
    return cycle, names


def write_sidecar(cycle=None, names=None) -> str:
    lines = []
    if cycle is not None:
        lines.append("c6 " + " ".join(str(v + 1) for v in cycle))
    for i, label in enumerate(names or ()):
        lines.append(f"name {i + 1} {label}")
    return "\n".join(lines) + "\n" if lines else ""
