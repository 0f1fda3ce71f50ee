"""Cubic graphs: representation, graph6 I/O, connectivity and short cycles.

The neighbour order stored for each vertex is the *reference rotation*.
Every rotation system in the package is described by one flip bit per
vertex relative to this order, so the order is kept exactly as given.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "CubicGraph",
    "Connectivity",
    "GraphFormatError",
    "NotCubicError",
    "Hexagon",
    "SmallCycleSet",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "connectivity_class",
    "small_cycles",
    "is_induced",
    "girth",
]


class GraphFormatError(ValueError):
    """Malformed graph6 text or an invalid adjacency table."""


class NotCubicError(GraphFormatError):
    """The decoded graph is simple but not 3-regular."""


@dataclass(frozen=True, eq=False)
class CubicGraph:
    """A simple 3-regular graph on vertices ``0..n-1``.

    ``adj[v]`` lists the three neighbours of ``v``; that order is the
    reference rotation.  Equality and hashing ignore the order and compare
    the edge sets only.
    """

    adj: tuple[tuple[int, int, int], ...]
    _edges: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj = tuple(tuple(int(u) for u in nb) for nb in self.adj)
        n = len(adj)
        if n < 4 or n % 2:
            raise NotCubicError(f"a cubic graph needs an even n >= 4, got n={n}")
        for v, nb in enumerate(adj):
            if len(nb) != 3:
                raise NotCubicError(f"vertex {v} has degree {len(nb)}")
            if len(set(nb)) != 3:
                raise GraphFormatError(f"parallel edges at vertex {v}")
            for u in nb:
                if not 0 <= u < n:
                    raise GraphFormatError(f"vertex {v}: neighbour {u} out of range")
                if u == v:
                    raise GraphFormatError(f"loop at vertex {v}")
                if v not in adj[u]:
                    raise GraphFormatError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "adj", adj)
        edges = frozenset((min(v, u), max(v, u)) for v in range(n) for u in adj[v])
        object.__setattr__(self, "_edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "CubicGraph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return cls(tuple(tuple(nb) for nb in nbrs))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return 3 * self.n // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def relabel(self, perm: Sequence[int]) -> "CubicGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``; neighbour order is kept."""
        out: list = [None] * self.n
        for v, nb in enumerate(self.adj):
            out[perm[v]] = tuple(perm[u] for u in nb)
        return CubicGraph(tuple(out))

    def sorted_adjacency(self) -> "CubicGraph":
        return CubicGraph(tuple(tuple(sorted(nb)) for nb in self.adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CubicGraph):
            return NotImplemented
        return self._edges == other._edges and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, g6={write_graph6(self)!r})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def decode_graph6(line: str) -> tuple[int, list[tuple[int, int]]]:
    """Decode any graph6 string into ``(n, edges)`` without degree checks."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("graph6 text must be ASCII") from exc
    if any(c < 63 or c > 126 for c in data):
        raise GraphFormatError(f"invalid graph6 character in {s!r}")
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return n, edges


def parse_graph6(line: str) -> CubicGraph:
    """Parse one graph6 line into a :class:`CubicGraph`.

    Neighbours are stored in increasing order, so the reference rotation of
    a parsed graph is the sorted one.

    Raises:
        GraphFormatError: the text is not valid graph6.
        NotCubicError: the graph is valid but not 3-regular (or n is odd).
    """
    n, edges = decode_graph6(line)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    bad = [v for v in range(n) if len(nbrs[v]) != 3]
    if bad or n < 4 or n % 2:
        raise NotCubicError(
            f"graph on {n} vertices is not cubic"
            + (f" (vertex {bad[0]} has degree {len(nbrs[bad[0]])})" if bad else "")
        )
    return CubicGraph(tuple(tuple(sorted(nb)) for nb in nbrs))


def write_graph6(g: CubicGraph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = set(g.adj[j])
        bits.extend(1 if i in row else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_size(n) + "".join(chars)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for the non-empty, non-header lines."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith(">>") and not text.startswith(_HEADER):
            continue
        if text == _HEADER:
            continue
        yield lineno, text


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

class Connectivity(enum.IntEnum):
    DISCONNECTED = 0
    ONE = 1
    TWO = 2
    THREE = 3

    @property
    def label(self) -> str:
        return ("disconnected", "1-connected", "2-connected", "3-connected")[self.value]


def _components(adj, removed: int) -> int:
    n = len(adj)
    seen = [False] * n
    if removed >= 0:
        seen[removed] = True
    comps = 0
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
    return comps


def _has_articulation(adj, removed: int) -> bool:
    """Tarjan's articulation-point test on ``G - removed`` (assumed connected)."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    root = 1 if removed == 0 else 0
    disc[root] = low[root] = 0
    timer = 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == removed or u == parent:
                continue
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((u, v, iter(adj[u])))
                advanced = True
                break
            low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if parent != root and low[v] >= disc[parent]:
                return True
    return root_children > 1


def connectivity_class(g: CubicGraph) -> Connectivity:
    """Exact vertex-connectivity class, capped at 3 (the maximum for cubic graphs)."""
    adj = g.adj
    if _components(adj, -1) > 1:
        return Connectivity.DISCONNECTED
    if _has_articulation(adj, -1):
        return Connectivity.ONE
    for v in range(g.n):
        if _has_articulation(adj, v):
            return Connectivity.TWO
    return Connectivity.THREE


# ---------------------------------------------------------------------------
# short cycles
# ---------------------------------------------------------------------------

class Hexagon(NamedTuple):
    cycle: tuple[int, ...]
    # thirds[i] is the neighbour of cycle[i] that is not on the cycle
    thirds: tuple[int, ...]


@dataclass(frozen=True)
class SmallCycleSet:
    triangles: tuple[tuple[int, ...], ...]
    quads: tuple[tuple[int, ...], ...]
    pentagons: tuple[tuple[int, ...], ...]
    hexagons: tuple[Hexagon, ...]

    def forced_faces(self, g: CubicGraph) -> list[tuple[int, ...]]:
        """Cycles that are facial in every polyhedral embedding of ``g``."""
        quads = () if g.n == 4 else self.quads
        return [*self.triangles, *quads, *self.pentagons]


def is_induced(g: CubicGraph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(cycle[i], cycle[j]):
                return False
    return True


def _cycles_up_to(g: CubicGraph, max_len: int) -> dict[int, list[tuple[int, ...]]]:
    """All simple cycles of length 3..max_len in canonical form.

    The canonical vertex sequence starts at the smallest vertex and walks
    towards the smaller of its two cycle neighbours.
    """
    adj = g.adj
    found: dict[int, list[tuple[int, ...]]] = {k: [] for k in range(3, max_len + 1)}
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(v: int) -> None:
            for u in adj[v]:
                if u == s and len(path) >= 3:
                    if path[1] < path[-1]:
                        found[len(path)].append(tuple(path))
                    continue
                if u <= s or u in on_path or len(path) == max_len:
                    continue
                path.append(u)
                on_path.add(u)
                extend(u)
                path.pop()
                on_path.discard(u)

        extend(s)
    for k in found:
        found[k].sort()
    return found


def small_cycles(g: CubicGraph) -> SmallCycleSet:
    """All 3- and 4-cycles and all induced 5- and 6-cycles of ``g``."""
    cyc = _cycles_up_to(g, 6)
    pentagons = tuple(c for c in cyc[5] if is_induced(g, c))
    hexagons = []
    for c in cyc[6]:
        if not is_induced(g, c):
            continue
        thirds = []
        for i, v in enumerate(c):
            on = (c[i - 1], c[(i + 1) % 6])
            thirds.append(next(u for u in g.adj[v] if u not in on))
        hexagons.append(Hexagon(c, tuple(thirds)))
    return SmallCycleSet(
        triangles=tuple(cyc[3]),
        quads=tuple(cyc[4]),
        pentagons=pentagons,
        hexagons=tuple(hexagons),
    )


def girth(g: CubicGraph) -> int:
    """Length of a shortest cycle (BFS from every vertex)."""
    best = g.n + 1
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        for v in queue:
            for u in g.adj[v]:
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best
