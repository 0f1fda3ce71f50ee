"""Rotation systems of cubic graphs and everything traced from them.

A directed edge (dart) is encoded as ``3 * v + slot`` where ``slot`` indexes
the reference neighbour order ``graph.adj[v]``.  A rotation system is one
flip bit per vertex: bit 0 keeps the reference cyclic order ``(a, b, c)``,
bit 1 uses ``(a, c, b)``.  Rotations are read as clockwise.

Faces follow ``e_{i+1} = nx(inverse(e_i))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

from .graph import CubicGraph, SmallCycleSet, small_cycles

__all__ = [
    "RotationSystem",
    "FaceSet",
    "Obstruction",
    "RotFormatError",
    "dart_tables",
    "trace_faces",
    "genus",
    "is_polyhedral",
    "find_obstruction",
    "dual_is_simple",
    "mirror",
    "petrie_switch",
    "parse_rot",
    "iter_rot_blocks",
    "write_rot",
    "write_rots",
    "facial_cycle",
    "hexagon_rule_holds",
    "small_cycle_violations",
]


def dart_tables(g: CubicGraph) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """``(head, next0, next1)`` lookup tables over the ``3n`` darts.

    ``head[d]`` is the vertex dart ``d`` points to; ``nextK[d]`` is the dart
    following ``d`` along its face when the head vertex has flip bit ``K``.
    """
    # keyed on adj, not on the graph: graph equality ignores neighbour order
    return _dart_tables(g.adj)


@lru_cache(maxsize=4096)
def _dart_tables(adj) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    head = []
    next0 = []
    next1 = []
    for v in range(len(adj)):
        for s in range(3):
            w = adj[v][s]
            t = adj[w].index(v)
            head.append(w)
            next0.append(3 * w + (t + 1) % 3)
            next1.append(3 * w + (t + 2) % 3)
    return tuple(head), tuple(next0), tuple(next1)


def _trace(g: CubicGraph, flips: Sequence[int]) -> list[list[int]]:
    head, next0, next1 = dart_tables(g)
    m = 3 * g.n
    seen = [False] * m
    faces = []
    for d0 in range(m):
        if seen[d0]:
            continue
        face = []
        d = d0
        while not seen[d]:
            seen[d] = True
            face.append(d)
            d = next1[d] if flips[head[d]] else next0[d]
        faces.append(face)
    return faces


class RotationSystem:
    """A cubic graph together with a cyclic neighbour order at every vertex.

    Two rotation systems compare equal when they have the same edge set
    and the same cyclic order at every vertex, regardless of how the
    underlying reference order was stored.
    """

    __slots__ = ("graph", "flips", "_key")

    def __init__(self, graph: CubicGraph, flips: Optional[Sequence[int]] = None):
        if flips is None:
            flips = (0,) * graph.n
        flips = tuple(1 if f else 0 for f in flips)
        if len(flips) != graph.n:
            raise ValueError(f"expected {graph.n} flip bits, got {len(flips)}")
        self.graph = graph
        self.flips = flips
        self._key = None

    @classmethod
    def from_rotations(cls, graph: CubicGraph, rotations: Sequence[Sequence[int]]) -> "RotationSystem":
        flips = []
        for v, rot in enumerate(rotations):
            rot = tuple(rot)
            if sorted(rot) != sorted(graph.adj[v]):
                raise ValueError(f"rotation at {v} is not a permutation of its neighbours")
            a, b, _ = graph.adj[v]
            i = rot.index(a)
            flips.append(0 if rot[(i + 1) % 3] == b else 1)
        return cls(graph, flips)

    @classmethod
    def from_mask(cls, graph: CubicGraph, mask: int) -> "RotationSystem":
        return cls(graph, [(mask >> v) & 1 for v in range(graph.n)])

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def mask(self) -> int:
        """Flip bits packed into an int, vertex ``v`` at bit ``v``."""
        m = 0
        for v, f in enumerate(self.flips):
            m |= f << v
        return m

    def rotation(self, v: int) -> tuple[int, int, int]:
        a, b, c = self.graph.adj[v]
        return (a, c, b) if self.flips[v] else (a, b, c)

    def rotations(self) -> list[tuple[int, int, int]]:
        return [self.rotation(v) for v in range(self.n)]

    def nx(self, v: int, u: int) -> int:
        """Head of the dart following ``(v, u)`` in the rotation at ``v``."""
        rot = self.rotation(v)
        return rot[(rot.index(u) + 1) % 3]

    def _canonical_key(self):
        if self._key is None:
            rots = []
            for v in range(self.n):
                rot = self.rotation(v)
                i = rot.index(min(rot))
                rots.append(rot[i:] + rot[:i])
            self._key = tuple(rots)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self.n == other.n and self._canonical_key() == other._canonical_key()

    def __hash__(self) -> int:
        return hash(self._canonical_key())

    def __repr__(self) -> str:
        return f"RotationSystem(n={self.n}, genus={genus(self)}, flips={''.join(map(str, self.flips))})"


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[int, ...], ...]
    face_vertices: tuple[tuple[int, ...], ...]
    bitsets: tuple[int, ...]
    genus: int
    n: int

    def __len__(self) -> int:
        return len(self.faces)

    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def face_of_dart(self) -> list[int]:
        out = [0] * (3 * self.n)
        for i, face in enumerate(self.faces):
            for d in face:
                out[d] = i
        return out


def _euler_genus(n: int, num_faces: int) -> int:
    twice = 2 - n + 3 * n // 2 - num_faces
    assert twice >= 0 and twice % 2 == 0, (n, num_faces)
    return twice // 2


def trace_faces(r: RotationSystem) -> FaceSet:
    """Partition the ``3n`` darts into faces.

    Faces are listed by their smallest dart, and each face starts there.
    """
    raw = _trace(r.graph, r.flips)
    verts = []
    bits = []
    for face in raw:
        vs = tuple(d // 3 for d in face)
        b = 0
        for v in vs:
            b |= 1 << v
        verts.append(vs)
        bits.append(b)
    return FaceSet(
        faces=tuple(tuple(f) for f in raw),
        face_vertices=tuple(verts),
        bitsets=tuple(bits),
        genus=_euler_genus(r.n, len(raw)),
        n=r.n,
    )


def genus(r: RotationSystem) -> int:
    return _euler_genus(r.n, len(_trace(r.graph, r.flips)))


def is_polyhedral(r: RotationSystem) -> bool:
    """No vertex repeats on a facial walk and no two faces share 3 vertices."""
    bits = []
    for face in _trace(r.graph, r.flips):
        b = 0
        for d in face:
            b |= 1 << (d // 3)
        if b.bit_count() != len(face):
            return False
        for other in bits:
            if (b & other).bit_count() > 2:
                return False
        bits.append(b)
    return True


# ---------------------------------------------------------------------------
# obstructions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Obstruction:
    """Witness that an embedding is not polyhedral.

    ``kind == "repeated-vertex"``: ``segment`` is the stretch of face
    ``faces[0]`` from one occurrence of ``vertex`` to the next; keeping the
    rotations at ``vertices`` keeps the repetition.

    ``kind == "face-pair"``: faces ``faces[0]`` and ``faces[1]`` share at
    least three vertices and ``vertices`` is the union of both faces.
    """

    kind: str
    faces: tuple[int, ...]
    vertices: frozenset
    vertex: Optional[int] = None
    segment: tuple[int, ...] = ()

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def obstruction_candidates(faces: Sequence[Sequence[int]], bitsets: Sequence[int]):
    """Yield ``(vertex_mask, kind, face_ids, vertex, segment)`` for every obstruction.

    ``faces`` are vertex sequences of the facial walks.
    """
    for fi, vs in enumerate(faces):
        if bitsets[fi].bit_count() == len(vs):
            continue
        k = len(vs)
        pos: dict[int, list[int]] = {}
        for i, v in enumerate(vs):
            pos.setdefault(v, []).append(i)
        for v, occ in pos.items():
            if len(occ) < 2:
                continue
            for a, b in zip(occ, occ[1:] + [occ[0] + k]):
                seg = tuple(vs[i % k] for i in range(a, b + 1))
                m = 0
                for u in seg[1:]:
                    m |= 1 << u
                yield m, "repeated-vertex", (fi,), v, seg
    for i in range(len(bitsets)):
        bi = bitsets[i]
        for j in range(i + 1, len(bitsets)):
            if (bi & bitsets[j]).bit_count() > 2:
                yield bi | bitsets[j], "face-pair", (i, j), None, ()


def mask_lex_less(a: int, b: int) -> bool:
    """Whether the sorted vertex tuple of mask ``a`` precedes that of ``b``."""
    x = a ^ b
    if not x:
        return False
    low = x & -x
    if a & low:
        # b wins only if it has nothing above the first difference
        return (b & ~(low - 1)) != 0
    return (a & ~(low - 1)) == 0


def best_obstruction_mask(faces, bitsets, fixed_mask: int,
                          stop_at_fixed: bool = False) -> Optional[tuple[int, int]]:
    """``(unfixed_count, vertex_mask)`` of the preferred obstruction, or None.

    Same preference as :func:`find_obstruction`.  Boundary walks stop as
    soon as they hold more unfixed vertices than the best candidate so far.
    With ``stop_at_fixed`` the first obstruction made only of fixed
    vertices is returned as is.
    """
    best_cnt = -1
    best_m = 0
    for fi, vs in enumerate(faces):
        k = len(vs)
        if bitsets[fi].bit_count() == k:
            continue
        seen = 0
        dup = 0
        for v in vs:
            bit = 1 << v
            if seen & bit:
                dup |= bit
            seen |= bit
        for a in range(k):
            v = vs[a]
            if not (dup >> v) & 1:
                continue
            m = 1 << v
            cnt = 0 if fixed_mask & m else 1
            i = a + 1
            while True:
                u = vs[i % k] if i >= k else vs[i]
                if u == v:
                    break
                bit = 1 << u
                if not m & bit:
                    m |= bit
                    if not fixed_mask & bit:
                        cnt += 1
                        if 0 <= best_cnt < cnt:
                            break
                i += 1
            if u != v:
                continue
            if best_cnt < 0 or cnt < best_cnt or (cnt == best_cnt and mask_lex_less(m, best_m)):
                best_cnt, best_m = cnt, m
                if stop_at_fixed and cnt == 0:
                    return 0, m
    free = ~fixed_mask
    nf = len(bitsets)
    for i in range(nf):
        bi = bitsets[i]
        for j in range(i + 1, nf):
            bj = bitsets[j]
            if (bi & bj).bit_count() > 2:
                m = bi | bj
                cnt = (m & free).bit_count()
                if best_cnt < 0 or cnt < best_cnt or (cnt == best_cnt and mask_lex_less(m, best_m)):
                    best_cnt, best_m = cnt, m
                    if stop_at_fixed and cnt == 0:
                        return 0, m
    if best_cnt < 0:
        return None
    return best_cnt, best_m


def find_obstruction(r: RotationSystem, fixed: Iterable[int] = ()) -> Optional[Obstruction]:
    """The preferred obstruction of ``r`` or ``None`` if ``r`` is polyhedral.

    Preference: fewest vertices outside ``fixed`` (so an obstruction made of
    fixed vertices only wins whenever one exists), then the lexicographically
    smallest sorted vertex set, then repeated-vertex before face-pair.
    """
    fs = trace_faces(r)
    fixed_mask = 0
    for v in fixed:
        fixed_mask |= 1 << v
    free = ~fixed_mask
    best = None
    best_key = None
    for m, kind, fids, vertex, seg in obstruction_candidates(fs.face_vertices, fs.bitsets):
        key = ((m & free).bit_count(), _mask_to_tuple(m), kind != "repeated-vertex", fids)
        if best_key is None or key < best_key:
            best_key = key
            best = (m, kind, fids, vertex, seg)
    if best is None:
        return None
    m, kind, fids, vertex, seg = best
    return Obstruction(kind=kind, faces=fids, vertices=frozenset(_mask_to_tuple(m)),
                       vertex=vertex, segment=seg)


def dual_is_simple(r: RotationSystem) -> bool:
    """True iff the dual multigraph has neither loops nor parallel edges."""
    fs = trace_faces(r)
    face_of = fs.face_of_dart()
    head, _, _ = dart_tables(r.graph)
    seen = set()
    for d in range(3 * r.n):
        v, w = d // 3, head[d]
        if v > w:
            continue
        inv = 3 * w + r.graph.adj[w].index(v)
        f1, f2 = face_of[d], face_of[inv]
        if f1 == f2:
            return False
        pair = (min(f1, f2), max(f1, f2))
        if pair in seen:
            return False
        seen.add(pair)
    return True


def mirror(r: RotationSystem) -> RotationSystem:
    return RotationSystem(r.graph, [1 - f for f in r.flips])


def petrie_switch(r: RotationSystem, s: Iterable[int]) -> RotationSystem:
    """Reverse the rotation at every vertex of ``s``."""
    flips = list(r.flips)
    for v in set(s):
        flips[v] ^= 1
    return RotationSystem(r.graph, flips)


# ---------------------------------------------------------------------------
# small-cycle validators
# ---------------------------------------------------------------------------

def facial_cycle(r: RotationSystem, cycle: Sequence[int], fs: Optional[FaceSet] = None) -> bool:
    """Whether one of the two directions of ``cycle`` is a face of ``r``."""
    fs = fs or trace_faces(r)
    face_of = fs.face_of_dart()
    adj = r.graph.adj
    k = len(cycle)
    for seq in (list(cycle), list(reversed(cycle))):
        darts = [3 * seq[i] + adj[seq[i]].index(seq[(i + 1) % k]) for i in range(k)]
        f = face_of[darts[0]]
        if len(fs.faces[f]) == k and all(face_of[d] == f for d in darts):
            return True
    return False


def hexagon_rule_holds(r: RotationSystem, cycle: Sequence[int], thirds: Sequence[int]) -> bool:
    """Side rule for an induced 6-cycle: facial, or 3+3 non-consecutive attachments."""
    right = []
    k = len(cycle)
    for i in range(k):
        v, nxt = cycle[i], cycle[(i + 1) % k]
        rot = r.rotation(v)
        right.append(rot[(rot.index(nxt) + 1) % 3] == thirds[i])
    count = sum(right)
    if count in (0, k):
        return True
    if count != 3:
        return False
    for side in (True, False):
        idx = [i for i in range(k) if right[i] == side]
        for i in range(k):
            if all((i + j) % k in idx for j in range(3)):
                return False
    return True


def small_cycle_violations(r: RotationSystem, cycles: Optional[SmallCycleSet] = None) -> list[str]:
    """Short cycles breaking the rules every polyhedral embedding obeys.

    3-cycles, 4-cycles (unless the graph is K4) and induced 5-cycles must be
    faces; induced 6-cycles must satisfy :func:`hexagon_rule_holds`.
    """
    cycles = cycles or small_cycles(r.graph)
    fs = trace_faces(r)
    out = []
    for c in cycles.forced_faces(r.graph):
        if not facial_cycle(r, c, fs):
            out.append(f"non-facial {len(c)}-cycle {c}")
    for hexagon in cycles.hexagons:
        if not hexagon_rule_holds(r, hexagon.cycle, hexagon.thirds):
            out.append(f"hexagon rule broken on {hexagon.cycle}")
    return out


# ---------------------------------------------------------------------------
# .rot text format
# ---------------------------------------------------------------------------

class RotFormatError(ValueError):
    def __init__(self, message: str, block: Optional[int] = None):
        self.block = block
        super().__init__(message if block is None else f"block {block}: {message}")


def write_rot(r: RotationSystem, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {r.n} genus {genus(r)}")
    for v in range(r.n):
        a, b, c = r.rotation(v)
        lines.append(f"{v}: {a} {b} {c}")
    return "\n".join(lines) + "\n"


def write_rots(rs: Iterable[RotationSystem]) -> str:
    return "\n".join(write_rot(r) for r in rs)


def _split_blocks(text: str) -> list[list[str]]:
    blocks: list[list[str]] = []
    cur: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not raw.strip():
            if cur:
                blocks.append(cur)
                cur = []
            continue
        if line:
            cur.append(line)
    if cur:
        blocks.append(cur)
    return blocks


def _parse_block(lines: list[str], index: int) -> RotationSystem:
    head = lines[0].split()
    if len(head) != 4 or head[0] != "n" or head[2] != "genus":
        raise RotFormatError(f"bad header {lines[0]!r}", index)
    try:
        n, declared = int(head[1]), int(head[3])
    except ValueError:
        raise RotFormatError(f"bad header {lines[0]!r}", index) from None
    rots: dict[int, tuple[int, ...]] = {}
    for line in lines[1:]:
        if ":" not in line:
            raise RotFormatError(f"bad rotation line {line!r}", index)
        left, right = line.split(":", 1)
        try:
            v = int(left)
            nb = tuple(int(x) for x in right.split())
        except ValueError:
            raise RotFormatError(f"bad rotation line {line!r}", index) from None
        if not 0 <= v < n:
            raise RotFormatError(f"unknown vertex id {v}", index)
        if v in rots:
            raise RotFormatError(f"vertex {v} listed twice", index)
        if len(nb) != 3:
            raise RotFormatError(f"vertex {v} has degree {len(nb)}", index)
        for u in nb:
            if not 0 <= u < n:
                raise RotFormatError(f"unknown vertex id {u} at vertex {v}", index)
        rots[v] = nb
    if len(rots) != n:
        missing = sorted(set(range(n)) - set(rots))
        raise RotFormatError(f"missing rotation for vertices {missing[:5]}", index)
    for v, nb in rots.items():
        if len(set(nb)) != 3:
            raise RotFormatError(f"repeated neighbour at vertex {v}", index)
        for u in nb:
            if v not in rots[u]:
                raise RotFormatError(f"edge {v}-{u} not declared at {u}", index)
    try:
        g = CubicGraph(tuple(rots[v] for v in range(n)))
    except ValueError as exc:
        raise RotFormatError(str(exc), index) from None
    r = RotationSystem(g)
    if genus(r) != declared:
        raise RotFormatError(f"declared genus {declared} but traced genus {genus(r)}", index)
    return r


def parse_rot(text: str) -> list[RotationSystem]:
    """Parse every blank-line separated block of a .rot document."""
    return [_parse_block(b, i) for i, b in enumerate(_split_blocks(text))]


def iter_rot_blocks(text: str) -> Iterator[tuple[int, Union[RotationSystem, RotFormatError]]]:
    """``(index, system)`` per block, or ``(index, error)`` for a block that fails to parse."""
    for i, b in enumerate(_split_blocks(text)):
        try:
            yield i, _parse_block(b, i)
        except RotFormatError as exc:
            yield i, exc
