"""Canonical codes for embedded and abstract cubic graphs."""

from __future__ import annotations

from collections import defaultdict
from typing import Optional, Sequence

from .embedding import RotationSystem
from .graph import CubicGraph

__all__ = [
    "CanonicalCode",
    "canon_embedded",
    "canon_graph",
    "canonical_labeling",
    "group_isomorphic",
]


class CanonicalCode(bytes):
    """Bytes that compare equal exactly for isomorphic inputs."""

    def __repr__(self) -> str:
        return f"CanonicalCode({self.hex()[:32]}{'...' if len(self) > 16 else ''})"


def _pack(n: int, values: Sequence[int]) -> CanonicalCode:
    width = 1 if n < 256 else 2
    out = bytearray(n.to_bytes(4, "big"))
    for x in values:
        out += x.to_bytes(width, "big")
    return CanonicalCode(bytes(out))


# ---------------------------------------------------------------------------
# embedded graphs
# ---------------------------------------------------------------------------

def _bfs_code(rots: Sequence[Sequence[int]], start: int, first: int,
              best: Optional[list[int]]) -> Optional[list[int]]:
    """Code of the BFS from dart ``(start, first)``; None once it exceeds ``best``."""
    n = len(rots)
    label = [-1] * n
    entry = [0] * n
    label[start] = 0
    entry[start] = first
    order = [start]
    code: list[int] = []
    nxt = 1
    pos = 0
    smaller = best is None
    for x in order:
        rot = rots[x]
        i = rot.index(entry[x])
        for j in range(3):
            y = rot[(i + j) % 3]
            if label[y] < 0:
                label[y] = nxt
                entry[y] = x
                nxt += 1
                order.append(y)
            val = label[y]
            if not smaller:
                b = best[pos]
                if val > b:
                    return None
                if val < b:
                    smaller = True
            code.append(val)
            pos += 1
    return code if smaller else None


def canon_embedded(r: RotationSystem, include_mirror: bool = True) -> CanonicalCode:
    """Canonical code of a connected embedded cubic graph.

    Minimum over breadth-first relabelings from every dart and every
    orientation.  With ``include_mirror`` the code is shared with the
    mirror image (orientation-reversing isomorphisms allowed).
    """
    forward = r.rotations()
    variants = [forward]
    if include_mirror:
        variants.append([(a, c, b) for a, b, c in forward])
    best: Optional[list[int]] = None
    for rots in variants:
        for v in range(r.n):
            for u in rots[v]:
                code = _bfs_code(rots, v, u, best)
                if code is not None:
                    best = code
    return _pack(r.n, [int(include_mirror)] + best)


def group_isomorphic(rs: Sequence[RotationSystem], include_mirror: bool = True) -> list[list[int]]:
    """Indices of ``rs`` grouped by canonical code, in first-seen order."""
    groups: dict[bytes, list[int]] = {}
    for i, r in enumerate(rs):
        groups.setdefault(canon_embedded(r, include_mirror), []).append(i)
    return list(groups.values())


# ---------------------------------------------------------------------------
# abstract graphs
# ---------------------------------------------------------------------------
#
# Individualization-refinement.  Vertices start coloured by an invariant
# (number of vertices at each distance, number of triangles and of closed
# 4-walks through the vertex), the colouring is refined by neighbour
# colour multisets, and non-singleton cells are split by individualizing
# each of their vertices in turn.  Every leaf of that tree is a labeling;
# the smallest sorted edge list over all leaves is the code.  The tree is
# defined without reference to vertex names, so the code is canonical.

def _invariants(g: CubicGraph) -> list[tuple]:
    adj = g.adj
    n = g.n
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        for v in queue:
            dv = dist[v] + 1
            for u in adj[v]:
                if dist[u] < 0:
                    dist[u] = dv
                    queue.append(u)
        profile = [0] * (max(dist) + 1)
        for d in dist:
            profile[d] += 1
        a, b, c = adj[s]
        tri = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
        # paths s-x-y-z-s of length 4 counted through common neighbours
        walks = 0
        for x in adj[s]:
            for y in adj[x]:
                if y == s:
                    continue
                for z in adj[y]:
                    if z != x and z != s and s in adj[z]:
                        walks += 1
        out.append((tuple(profile), tri, walks))
    return out


def _rank(keys: Sequence) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(adj, col: list[int]) -> list[int]:
    ncells = len(set(col))
    n = len(col)
    while True:
        keys = [(col[v], tuple(sorted((col[u] for u in adj[v])))) for v in range(n)]
        new = _rank(keys)
        k = len(set(new))
        if k == ncells:
            return new
        col, ncells = new, k


def _leaf_code(g: CubicGraph, col: list[int]) -> tuple[int, ...]:
    return tuple(sorted(
        (min(col[a], col[b]) << 16) | max(col[a], col[b]) for a, b in g.edges()
    ))


def canonical_labeling(g: CubicGraph) -> tuple[list[int], tuple[int, ...]]:
    """``(perm, code)`` with ``perm[v]`` the canonical label of ``v``."""
    adj = g.adj
    n = g.n
    col = _refine(adj, _rank(_invariants(g)))
    best_code: Optional[tuple[int, ...]] = None
    best_col: Optional[list[int]] = None

    def search(col: list[int]) -> None:
        nonlocal best_code, best_col
        cells: dict[int, list[int]] = defaultdict(list)
        for v, c in enumerate(col):
            cells[c].append(v)
        if len(cells) == n:
            code = _leaf_code(g, col)
            if best_code is None or code < best_code:
                best_code, best_col = code, col
            return
        # first smallest non-trivial cell
        target = min((len(m), c) for c, m in cells.items() if len(m) > 1)[1]
        for v in cells[target]:
            keys = [(2 * c + (0 if u == v else 1) if c >= target else 2 * c) for u, c in enumerate(col)]
            search(_refine(adj, _rank(keys)))

    search(col)
    return best_col, best_code


def canon_graph(g: CubicGraph) -> CanonicalCode:
    """Canonical code of an abstract cubic graph."""
    _, code = canonical_labeling(g)
    flat = []
    for e in code:
        flat.extend((e >> 16, e & 0xFFFF))
    return _pack(g.n, flat)
