"""Complementary hitting sets and the complete-bipartite list coloring path.

Subsets of the palette [k] are machine-word bitmasks (bit i is color i+1),
capping k at 63.  The decision procedure enumerates all 2^k candidate sets
in ascending bitmask order and returns the first that works, so results are
deterministic; the per-candidate check short-circuits on the first unhit
family member.
"""

from __future__ import annotations

from .graphs import BipartiteGraph, InputError, PreconditionError
from .solvers import Coloring, ListAssignment

MAX_K = 63


class SetFamily:
    """A multiset of subsets of the palette [k]; members may repeat."""

    __slots__ = ("k", "members", "masks")

    def __init__(self, k: int, members):
        if not (0 <= k <= MAX_K):
            raise InputError(f"palette size must be in 0..{MAX_K}")
        members = tuple(frozenset(m) for m in members)
        masks = []
        for m in members:
            mask = 0
            for c in m:
                if not (1 <= c <= k):
                    raise InputError(f"family member contains {c}, outside [{k}]")
                mask |= 1 << (c - 1)
            masks.append(mask)
        self.k = k
        self.members = members
        self.masks = tuple(masks)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self):
        return f"SetFamily(k={self.k}, members={len(self.members)})"


def _mask_to_set(mask: int) -> frozenset:
    out = []
    c = 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return frozenset(out)


def complementary_hitting_sets(a: SetFamily, b: SetFamily, k: int):
    """Smallest-bitmask S hitting every member of ``a`` while [k] \\ S hits
    every member of ``b``; None when no such S exists."""
    if a.k != k or b.k != k:
        raise InputError("family palettes disagree with k")
    full = (1 << k) - 1
    masks_a = a.masks
    masks_b = b.masks
    for s in range(1 << k):
        sbar = full ^ s
        ok = True
        for m in masks_a:
            if not (m & s):
                ok = False
                break
        if not ok:
            continue
        for m in masks_b:
            if not (m & sbar):
                ok = False
                break
        if ok:
            return _mask_to_set(s)
    return None


def listcol_complete_bipartite(b: BipartiteGraph, lists, k: int):
    """List coloring of a complete bipartite graph via complementary hitting sets.

    The A-part lists become one family and the B-part lists the other; a
    witness set S recolors the instance with A-part colors drawn from S and
    B-part colors from its complement.
    """
    if not isinstance(lists, ListAssignment):
        lists = ListAssignment(lists)
    if len(lists) != b.n:
        raise InputError("list assignment does not cover every vertex")
    xs, ys = b.x_vertices(), b.y_vertices()
    if not xs or not ys:
        raise PreconditionError("both parts must be nonempty")
    g = b.graph
    for u in xs:
        for v in ys:
            if not g.has_edge(u, v):
                raise PreconditionError(
                    f"graph is not complete bipartite: ({u},{v}) is a non-edge"
                )
    for v in range(b.n):
        if any(c > k for c in lists[v]):
            raise PreconditionError(f"list of vertex {v} exceeds the palette [{k}]")

    fam_a = SetFamily(k, [lists[u] for u in xs])
    fam_b = SetFamily(k, [lists[v] for v in ys])
    s = complementary_hitting_sets(fam_a, fam_b, k)
    if s is None:
        return None
    sbar = frozenset(range(1, k + 1)) - s
    colors = [0] * b.n
    for u in xs:
        colors[u] = min(s & lists[u])
    for v in ys:
        colors[v] = min(sbar & lists[v])
    return Coloring(tuple(colors))
