"""Independent oracles: exhaustive embedding scans and a cubic graph generator.

Nothing here uses the search module, and the polyhedrality test in
:func:`brute_force_polyhedral` is written from the definition with plain
sets rather than the bitset code of :mod:`polyembed.embedding`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numba
import numpy as np

from .embedding import RotationSystem, dart_tables
from .graph import CubicGraph
from .iso import canon_graph, canonical_labeling

__all__ = [
    "GenusProfile",
    "brute_force_polyhedral",
    "polyhedral_by_definition",
    "genus_profile",
    "min_genus",
    "gen_cubic",
    "ring_of_diamonds",
    "bridge_join",
    "insert_diamond",
    "insert_edge",
]


# ---------------------------------------------------------------------------
# brute force over rotation systems
# ---------------------------------------------------------------------------

def _faces_by_definition(adj, rot: dict[int, tuple[int, int, int]]) -> list[list[tuple[int, int]]]:
    darts = {(v, u) for v in range(len(adj)) for u in adj[v]}
    faces = []
    while darts:
        first = min(darts)
        face = []
        e = first
        while True:
            darts.discard(e)
            face.append(e)
            v, w = e
            r = rot[w]
            e = (w, r[(r.index(v) + 1) % 3])
            if e == first:
                break
        faces.append(face)
    return faces


def polyhedral_by_definition(adj, rot: dict[int, tuple[int, int, int]]) -> bool:
    """Every face a simple cycle and any two faces meeting in at most 2 vertices."""
    vertex_sets = []
    for face in _faces_by_definition(adj, rot):
        vs = [v for v, _ in face]
        if len(set(vs)) != len(vs):
            return False
        vertex_sets.append(set(vs))
    for a, b in combinations(vertex_sets, 2):
        if len(a & b) > 2:
            return False
    return True


def brute_force_polyhedral(g: CubicGraph) -> list[RotationSystem]:
    """Every polyhedral rotation system with vertex 0 kept at its reference order.

    That convention picks one member of each mirror pair.  Cost grows as
    ``2^(n-1)``.
    """
    adj = g.adj
    n = g.n
    choices = [((a, b, c), (a, c, b)) for a, b, c in adj]
    out = []
    for mask in range(1 << (n - 1)):
        flips = [0] + [(mask >> (v - 1)) & 1 for v in range(1, n)]
        rot = {v: choices[v][flips[v]] for v in range(n)}
        if polyhedral_by_definition(adj, rot):
            out.append(RotationSystem(g, flips))
    return out


# ---------------------------------------------------------------------------
# genus profiles
# ---------------------------------------------------------------------------

@numba.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - numba.uint64(1)
        c += 1
    return c


@numba.njit(cache=True)
def _profile_kernel(head, next0, next1, n, lo, hi, want_poly, stop_at_planar):
    m = 3 * n
    max_faces = 2 + n // 2  # genus 0
    hist = np.zeros(n + 2, np.int64)
    poly = np.zeros(n + 2, np.int64)
    seen = np.zeros(m, np.uint8)
    bits = np.zeros(m, np.uint64)
    one = numba.uint64(1)
    for mask in range(lo, hi):
        # flip of vertex v >= 1 is bit v-1 of mask; vertex 0 is never flipped
        full = numba.uint64(mask) << one
        seen[:] = 0
        nf = 0
        simple = True
        for d0 in range(m):
            if seen[d0]:
                continue
            fb = numba.uint64(0)
            length = 0
            d = d0
            while not seen[d]:
                seen[d] = 1
                length += 1
                fb |= one << numba.uint64(d // 3)
                w = head[d]
                if (full >> numba.uint64(w)) & one:
                    d = next1[d]
                else:
                    d = next0[d]
            if want_poly:
                if _popcount(fb) != length:
                    simple = False
                bits[nf] = fb
            nf += 1
        g = (2 - n + 3 * n // 2 - nf) // 2
        hist[g] += 1
        if want_poly and simple:
            ok = True
            for i in range(nf):
                for j in range(i + 1, nf):
                    if _popcount(bits[i] & bits[j]) > 2:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                poly[g] += 1
        if stop_at_planar and nf == max_faces:
            break
    return hist, poly


@dataclass
class GenusProfile:
    """Genus histogram of the ``2^(n-1)`` rotation systems with vertex 0 fixed."""

    per_genus: dict[int, int] = field(default_factory=dict)
    polyhedral: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.per_genus.values())

    @property
    def min_genus(self) -> int:
        return min(g for g, c in self.per_genus.items() if c)

    def tsv(self) -> str:
        lines = ["genus\tcount\tpolyhedral_count"]
        for g in sorted(self.per_genus):
            lines.append(f"{g}\t{self.per_genus[g]}\t{self.polyhedral.get(g, 0)}")
        return "\n".join(lines) + "\n"


def _kernel_args(g: CubicGraph):
    if g.n > 63:
        raise ValueError("exhaustive scans support n <= 63")
    head, next0, next1 = dart_tables(g)
    return (np.array(head, np.int64), np.array(next0, np.int64), np.array(next1, np.int64))


def genus_profile(g: CubicGraph, polyhedral: bool = True) -> GenusProfile:
    """Exhaustive genus (and polyhedral) histogram; ``2^(n-1)`` face traces."""
    head, next0, next1 = _kernel_args(g)
    hist, poly = _profile_kernel(head, next0, next1, g.n, 0, 1 << (g.n - 1), polyhedral, False)
    return GenusProfile(
        per_genus={i: int(c) for i, c in enumerate(hist) if c},
        polyhedral={i: int(c) for i, c in enumerate(poly) if c},
    )


def min_genus(g: CubicGraph) -> int:
    """Minimum genus over all rotation systems, by exhaustion (stops early on genus 0)."""
    head, next0, next1 = _kernel_args(g)
    hist, _ = _profile_kernel(head, next0, next1, g.n, 0, 1 << (g.n - 1), False, True)
    return int(np.flatnonzero(hist)[0])


# ---------------------------------------------------------------------------
# generation of connected cubic graphs
# ---------------------------------------------------------------------------

def insert_edge(g: CubicGraph, e1: tuple[int, int], e2: tuple[int, int]) -> CubicGraph:
    """Subdivide two distinct edges and join the two new vertices."""
    n = g.n
    x, y = n, n + 1
    nb = [list(a) for a in g.adj] + [[], []]
    for (a, b), new in ((e1, x), (e2, y)):
        nb[a][nb[a].index(b)] = new
        nb[b][nb[b].index(a)] = new
        nb[new].extend((a, b))
    nb[x].append(y)
    nb[y].append(x)
    return CubicGraph(tuple(tuple(a) for a in nb))


def bridge_join(g1: CubicGraph, e1: tuple[int, int], g2: CubicGraph, e2: tuple[int, int]) -> CubicGraph:
    """Subdivide ``e1`` in ``g1`` and ``e2`` in ``g2`` and join the new vertices by a bridge."""
    n1 = g1.n
    shifted = [tuple(u + n1 for u in a) for a in g2.adj]
    nb = [list(a) for a in g1.adj] + [list(a) for a in shifted] + [[], []]
    x, y = n1 + g2.n, n1 + g2.n + 1
    for (a, b), new in ((e1, x), ((e2[0] + n1, e2[1] + n1), y)):
        nb[a][nb[a].index(b)] = new
        nb[b][nb[b].index(a)] = new
        nb[new].extend((a, b))
    nb[x].append(y)
    nb[y].append(x)
    return CubicGraph(tuple(tuple(a) for a in nb))


def insert_diamond(g: CubicGraph, e: tuple[int, int]) -> CubicGraph:
    """Replace edge ``uv`` by ``u - p``, a diamond ``p, x, y, q`` (K4 minus ``pq``), ``q - v``."""
    n = g.n
    u, v = e
    p, x, y, q = n, n + 1, n + 2, n + 3
    nb = [list(a) for a in g.adj]
    nb[u][nb[u].index(v)] = p
    nb[v][nb[v].index(u)] = q
    nb += [[u, x, y], [p, y, q], [p, x, q], [x, y, v]]
    return CubicGraph(tuple(tuple(a) for a in nb))


def ring_of_diamonds(k: int) -> CubicGraph:
    """``k >= 2`` copies of K4 minus an edge joined in a ring (4k vertices)."""
    edges = []
    for i in range(k):
        p, x, y, q = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(p, x), (p, y), (x, y), (x, q), (y, q), (q, (4 * i + 4) % (4 * k))]
    return CubicGraph.from_edges(4 * k, edges)


def _canonical_form(g: CubicGraph) -> tuple[bytes, CubicGraph]:
    perm, _ = canonical_labeling(g)
    h = g.relabel(perm).sorted_adjacency()
    return canon_graph(h), h


_CACHE: dict[int, list[CubicGraph]] = {}


def gen_cubic(n: int) -> Iterator[CubicGraph]:
    """All connected simple cubic graphs on ``n`` vertices, one per isomorphism class.

    Graphs on ``n`` vertices come from smaller ones by three operations:
    edge insertion into a graph on ``n - 2`` vertices, a bridge between
    subdivided edges of two smaller graphs, and replacing an edge of a
    graph on ``n - 4`` vertices by a diamond string.  Edges next to a
    diamond never reduce by deletion, which is why the last one is needed.  Each graph is canonically labelled
    and the output is sorted by canonical code.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be even and >= 4")
    yield from _generate(n)


def _generate(n: int) -> list[CubicGraph]:
    if n in _CACHE:
        return _CACHE[n]
    if n == 4:
        found = {}
        code, h = _canonical_form(CubicGraph.from_edges(4, combinations(range(4), 2)))
        found[code] = h
    else:
        found = {}
        for parent in _generate(n - 2):
            edges = parent.edges()
            for e1, e2 in combinations(edges, 2):
                code, h = _canonical_form(insert_edge(parent, e1, e2))
                found.setdefault(code, h)
        for n1 in range(4, (n - 2) // 2 + 1, 2):
            n2 = n - 2 - n1
            for g1 in _generate(n1):
                for g2 in _generate(n2):
                    for e1 in g1.edges():
                        for e2 in g2.edges():
                            code, h = _canonical_form(bridge_join(g1, e1, g2, e2))
                            found.setdefault(code, h)
        if n >= 8:
            for parent in _generate(n - 4):
                for e in parent.edges():
                    code, h = _canonical_form(insert_diamond(parent, e))
                    found.setdefault(code, h)
    out = [found[c] for c in sorted(found)]
    _CACHE[n] = out
    return out
