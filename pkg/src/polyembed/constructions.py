"""Named cubic graphs, hexagonal tori, star products and the genus bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence

from .embedding import RotationSystem, mirror
from .graph import CubicGraph, GraphFormatError

__all__ = [
    "NAMED_GRAPHS",
    "named_graph",
    "hex_torus",
    "hex_torus_classes",
    "StarSpec",
    "star_product",
    "star_product_embedded",
    "max_genus_bound",
]


def _k4():
    return [(i, j) for i in range(4) for j in range(i + 1, 4)]


def _prism():
    # triangles 0-1-2 and 3-4-5, rungs i -- i+3
    return [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]


def _k33():
    return [(i, j) for i in range(3) for j in range(3, 6)]


def _petersen():
    # outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return edges


def _heawood():
    # LCF [5, -5]^7: Hamilton cycle 0..13, even i -- i+5
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return edges


def _coxeter():
    # a_i = i, b_i = 7+i, c_i = 14+i, d_i = 21+i over Z_7:
    # a_i ~ a_{i+1}, b_i ~ b_{i+2}, c_i ~ c_{i+3}, d_i ~ a_i, b_i, c_i
    edges = []
    for i in range(7):
        edges.append((i, (i + 1) % 7))
        edges.append((7 + i, 7 + (i + 2) % 7))
        edges.append((14 + i, 14 + (i + 3) % 7))
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return edges


NAMED_GRAPHS = {
    "k4": (4, _k4),
    "prism": (6, _prism),
    "k33": (6, _k33),
    "petersen": (10, _petersen),
    "heawood": (14, _heawood),
    "coxeter": (28, _coxeter),
}


def named_graph(name: str) -> CubicGraph:
    """One of ``k4, prism, k33, petersen, heawood, coxeter``.

    Neighbours are stored sorted, so the labelling is the one documented
    next to each edge list above.
    """
    try:
        n, build = NAMED_GRAPHS[name.lower()]
    except KeyError:
        raise KeyError(f"unknown graph {name!r}; known: {', '.join(NAMED_GRAPHS)}") from None
    return CubicGraph.from_edges(n, build()).sorted_adjacency()


# ---------------------------------------------------------------------------
# hexagonal torus
# ---------------------------------------------------------------------------
#
# k x k honeycomb on the torus.  Black b(i, j) = 2(ik + j), white
# w(i, j) = b(i, j) + 1, indices mod k.  Picture b(i, j) with its three
# white neighbours at compass angles
#
#            w(i, j)                  90 deg
#               |
#             b(i,j)
#            /      \
#     w(i-1,j)      w(i,j-1)      210 deg / 330 deg
#
# so the crossing edges of the k x k parallelogram glue row i = k-1 to
# row 0 and column j = k-1 to column 0.  Clockwise rotation by angle:
#   black: w(i,j), w(i,j-1), w(i-1,j)
#   white: b(i,j), b(i,j+1), b(i+1,j)

def _hex_ids(k: int):
    def black(i, j):
        return 2 * ((i % k) * k + (j % k))

    def white(i, j):
        return black(i, j) + 1

    return black, white


def hex_torus(k: int) -> RotationSystem:
    """Toroidal honeycomb with ``k*k`` hexagons and ``2k^2`` vertices."""
    if k < 3:
        raise ValueError("hex_torus needs k >= 3")
    black, white = _hex_ids(k)
    rot: list = [None] * (2 * k * k)
    for i in range(k):
        for j in range(k):
            rot[black(i, j)] = (white(i, j), white(i, j - 1), white(i - 1, j))
            rot[white(i, j)] = (black(i, j), black(i, j + 1), black(i + 1, j))
    return RotationSystem(CubicGraph(tuple(rot)))


def hex_torus_classes(k: int) -> tuple[list[int], list[int]]:
    """Bipartition ``(black, white)`` of :func:`hex_torus` ``(k)``."""
    n = 2 * k * k
    return list(range(0, n, 2)), list(range(1, n, 2))


# ---------------------------------------------------------------------------
# star product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarSpec:
    """Delete ``v`` from ``host`` and ``guest_vertex`` from ``guest`` and join
    the hanging edges.

    ``matching = (a, b, c, a', b', c')`` pairs host neighbour ``a`` with
    guest neighbour ``a'`` and so on.  Without it the stored neighbour orders
    are paired position by position.
    """

    host: CubicGraph
    v: int
    guest: CubicGraph
    guest_vertex: int
    matching: Optional[tuple[int, int, int, int, int, int]] = None

    def pairs(self) -> dict[int, int]:
        if self.matching is None:
            return dict(zip(self.host.adj[self.v], self.guest.adj[self.guest_vertex]))
        a, b, c, a2, b2, c2 = self.matching
        if sorted((a, b, c)) != sorted(self.host.adj[self.v]):
            raise GraphFormatError(f"{(a, b, c)} are not the neighbours of host vertex {self.v}")
        if sorted((a2, b2, c2)) != sorted(self.guest.adj[self.guest_vertex]):
            raise GraphFormatError(
                f"{(a2, b2, c2)} are not the neighbours of guest vertex {self.guest_vertex}"
            )
        return {a: a2, b: b2, c: c2}


def _glue(host_rot: Sequence[Sequence[int]], v: int,
          guest_rot: Sequence[Sequence[int]], w: int, pairs: dict[int, int]) -> CubicGraph:
    n1, n2 = len(host_rot), len(guest_rot)
    hmap = {x: i for i, x in enumerate(u for u in range(n1) if u != v)}
    gmap = {x: n1 - 1 + i for i, x in enumerate(u for u in range(n2) if u != w)}
    back = {b: a for a, b in pairs.items()}
    adj: list = [None] * (n1 + n2 - 2)
    for x in range(n1):
        if x != v:
            adj[hmap[x]] = tuple(gmap[pairs[x]] if u == v else hmap[u] for u in host_rot[x])
    for x in range(n2):
        if x != w:
            adj[gmap[x]] = tuple(hmap[back[x]] if u == w else gmap[u] for u in guest_rot[x])
    return CubicGraph(tuple(adj))


def star_product(spec: StarSpec) -> CubicGraph:
    """Abstract star product on ``n(host) + n(guest) - 2`` vertices.

    Host vertices keep their relative order and come first; neighbour lists
    keep their stored order with the deleted vertex replaced in place.
    """
    return _glue(spec.host.adj, spec.v, spec.guest.adj, spec.guest_vertex, spec.pairs())


def _cyclic_eq(a: Sequence[int], b: Sequence[int]) -> bool:
    i = list(b).index(a[0])
    return tuple(b[i:]) + tuple(b[:i]) == tuple(a)


def star_product_embedded(host: RotationSystem, v: int, guest: RotationSystem, guest_vertex: int,
                          matching: Optional[tuple[int, int, int, int, int, int]] = None
                          ) -> RotationSystem:
    """Star product of two embedded graphs, of genus ``g(host) + g(guest)``.

    The host is read with rotation ``(a, b, c)`` at ``v`` and the guest must
    then show ``(a', c', b')`` at ``guest_vertex``.  Without ``matching`` the
    pairing is chosen to satisfy this; with an explicit ``matching`` either
    factor is replaced by its mirror image when needed.
    """
    if matching is None:
        a, b, c = host.rotation(v)
        x, y, z = guest.rotation(guest_vertex)
        matching = (a, b, c, x, z, y)
    a, b, c, a2, b2, c2 = matching
    if not _cyclic_eq((a, b, c), host.rotation(v)):
        host = mirror(host)
    if not _cyclic_eq((a2, c2, b2), guest.rotation(guest_vertex)):
        guest = mirror(guest)
    spec = StarSpec(host.graph, v, guest.graph, guest_vertex, matching)
    g = _glue(host.rotations(), v, guest.rotations(), guest_vertex, spec.pairs())
    return RotationSystem(g)


# ---------------------------------------------------------------------------

def max_genus_bound(n: int) -> int:
    """Largest genus a polyhedral embedding of a cubic graph on ``n`` vertices can have.

    ``floor((n + 3 - sqrt(12n + 1)) / 4)`` in exact integer arithmetic.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be an even integer >= 4")
    m = 12 * n + 1
    r = isqrt(m)
    ceil_sqrt = r if r * r == m else r + 1
    return (n + 3 - ceil_sqrt) // 4
