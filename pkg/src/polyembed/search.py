"""Branch and bound enumeration of the polyhedral embeddings of a cubic graph.

Outline
-------
1. Graphs that are not 3-connected have no polyhedral embedding.
2. Every 3-cycle, 4-cycle and induced 5-cycle has to be a face.  Each such
   cycle ties the flip bits of consecutive cycle vertices together, which
   gives classes of vertices whose rotations are switched as one unit
   (union-find with parity).  A parity contradiction means no embedding.
3. The largest class is pinned, which identifies each embedding with its
   mirror image.  Non-trivial classes are then branched on, largest first.
4. Single-vertex classes are branched on through obstructions: if the
   current rotation system has an obstruction, some unfixed vertex of it
   must change, and the branches are "the first changed vertex is S_i".
5. After every decision the induced 6-cycles are checked against the
   hexagon rule, which detects dead branches and forces flips.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from ._fast import MAX_N, FastTracer
from .embedding import RotationSystem, _euler_genus, best_obstruction_mask, dart_tables
from .graph import Connectivity, CubicGraph, SmallCycleSet, connectivity_class, small_cycles

__all__ = [
    "ParityState",
    "Infeasible",
    "SearchConfig",
    "EmbeddingSummary",
    "compute_classes",
    "hexagon_propagate",
    "hexagon_word_allowed",
    "enumerate_polyhedral",
    "summarize",
]


def _allowed_words() -> tuple[bool, ...]:
    out = []
    for w in range(64):
        ones = [i for i in range(6) if (w >> i) & 1]
        if len(ones) in (0, 6):
            out.append(True)
            continue
        if len(ones) != 3:
            out.append(False)
            continue
        consecutive = any(all(((i + j) % 6) in ones for j in range(3)) for i in range(6))
        out.append(not consecutive)
    return tuple(out)


# bit i = side of the third edge at hexagon vertex i
_ALLOWED = _allowed_words()


def hexagon_word_allowed(word: int) -> bool:
    """Whether six side bits are possible around an induced 6-cycle.

    Allowed: all on one side (the cycle is a face), or three on each side
    with neither triple occupying three consecutive cycle vertices.
    """
    return _ALLOWED[word & 63]


def _ref_turn(g: CubicGraph, prev: int, v: int, nxt: int) -> int:
    """1 if ``nxt`` follows ``prev`` in the reference rotation at ``v``."""
    a = g.adj[v]
    return 1 if a[(a.index(prev) + 1) % 3] == nxt else 0


class ParityState:
    """Mutable search state: classes, their flips, and what is fixed.

    ``cls[v]`` is the class of ``v`` and ``par[v]`` its parity against the
    class value, so ``flips[v] == val[cls[v]] ^ par[v]``.  Every change goes
    through :meth:`assign` and is recorded on a trail for :meth:`undo`.
    """

    def __init__(self, g: CubicGraph, cls: list[int], par: list[int], members: list[list[int]]):
        self.graph = g
        self.cls = cls
        self.par = par
        self.members = members
        self.val = [0] * len(members)
        self.fixed = [False] * len(members)
        self.flips = list(par)
        self.fixed_mask = 0
        self.member_mask = [sum(1 << v for v in m) for m in members]
        self.anchor: Optional[int] = None
        self._trail: list[tuple[int, int]] = []

    @property
    def classes(self) -> list[list[int]]:
        return self.members

    def mark(self) -> int:
        return len(self._trail)

    def assign(self, c: int, value: int) -> None:
        """Set class ``c`` to ``value`` and fix it."""
        assert not self.fixed[c]
        self._trail.append((c, self.val[c]))
        if self.val[c] != value:
            self.val[c] = value
            flips = self.flips
            for v in self.members[c]:
                flips[v] ^= 1
        self.fixed[c] = True
        self.fixed_mask |= self.member_mask[c]

    def undo(self, mark: int) -> None:
        trail = self._trail
        while len(trail) > mark:
            c, old = trail.pop()
            self.fixed[c] = False
            self.fixed_mask &= ~self.member_mask[c]
            if self.val[c] != old:
                self.val[c] = old
                for v in self.members[c]:
                    self.flips[v] ^= 1

    def fixed_vertices(self) -> set[int]:
        return {v for v in range(self.graph.n) if self.fixed[self.cls[v]]}

    def rotation_system(self) -> RotationSystem:
        return RotationSystem(self.graph, self.flips)


@dataclass(frozen=True)
class Infeasible:
    """Parity contradiction: no rotation system makes all forced cycles faces.

    ``classes`` is the partition obtained when every forced cycle is merged
    regardless, ``cycle`` the first one whose constraint failed.
    """

    classes: tuple[tuple[int, ...], ...]
    cycle: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


def compute_classes(g: CubicGraph, cycles: Optional[SmallCycleSet] = None) -> Union[ParityState, Infeasible]:
    """Vertex classes forced by the short cycles, or :class:`Infeasible`.

    Along a cycle that must be a face, consecutive vertices must turn the
    same way, so their flip bits are equal or opposite depending on the
    reference rotation.
    """
    cycles = cycles or small_cycles(g)
    n = g.n
    parent = list(range(n))
    rel = [0] * n  # parity to parent

    def find(v: int) -> tuple[int, int]:
        p = 0
        path = []
        while parent[v] != v:
            path.append(v)
            p ^= rel[v]
            v = parent[v]
        root = v
        # path compression
        acc = p
        for u in path:
            nxt_acc = acc ^ rel[u]
            parent[u] = root
            rel[u] = acc
            acc = nxt_acc
        return root, p

    conflict: Optional[tuple[int, ...]] = None
    for cyc in cycles.forced_faces(g):
        k = len(cyc)
        turn = [_ref_turn(g, cyc[i - 1], cyc[i], cyc[(i + 1) % k]) for i in range(k)]
        for i in range(k):
            u, w = cyc[i], cyc[(i + 1) % k]
            want = turn[i] ^ turn[(i + 1) % k]
            ru, pu = find(u)
            rw, pw = find(w)
            if ru == rw:
                if pu ^ pw != want and conflict is None:
                    conflict = tuple(cyc)
                continue
            if ru < rw:
                ru, rw, pu, pw = rw, ru, pw, pu
            parent[ru] = rw
            rel[ru] = pu ^ pw ^ want

    roots: dict[int, int] = {}
    cls = [0] * n
    par = [0] * n
    members: list[list[int]] = []
    for v in range(n):
        r, p = find(v)
        if r not in roots:
            roots[r] = len(members)
            members.append([])
        c = roots[r]
        cls[v] = c
        members[c].append(v)
        par[v] = p
    if conflict is not None:
        return Infeasible(tuple(tuple(m) for m in members), conflict)
    # parity is measured against the smallest member of each class
    for c, mem in enumerate(members):
        p0 = par[mem[0]]
        for v in mem:
            par[v] ^= p0
    return ParityState(g, cls, par, members)


class _Hexagons:
    """Induced 6-cycles rewritten as constraints on class variables."""

    def __init__(self, g: CubicGraph, cycles: SmallCycleSet, state: ParityState):
        self.verts: list[tuple[int, ...]] = []
        self.offset: list[int] = []
        self.by_class: dict[int, list[int]] = {}
        for h, hexagon in enumerate(cycles.hexagons):
            c = hexagon.cycle
            word = 0
            for i in range(6):
                word |= _ref_turn(g, c[i - 1], c[i], c[(i + 1) % 6]) << i
            self.verts.append(c)
            self.offset.append(word)
            for cl in {state.cls[v] for v in c}:
                self.by_class.setdefault(cl, []).append(h)

    def __len__(self) -> int:
        return len(self.verts)


def hexagon_propagate(g: CubicGraph, cycles: SmallCycleSet, state: ParityState,
                      touched: Optional[Iterable[int]] = None,
                      max_free: int = 3, _hex: Optional[_Hexagons] = None) -> bool:
    """Apply the hexagon rule until nothing changes.

    A hexagon whose side bits depend on at most ``max_free`` unfixed
    classes is solved by enumeration: no allowed completion is a conflict
    (returns False); a class taking the same value in every allowed
    completion is assigned and fixed.  ``touched`` limits the first pass
    to hexagons meeting those classes.
    """
    hx = _hex or _Hexagons(g, cycles, state)
    if not len(hx):
        return True
    if touched is None:
        queue = list(range(len(hx)))
    else:
        queue = []
        for c in touched:
            queue.extend(hx.by_class.get(c, ()))
    pending = set(queue)
    flips = state.flips
    cls = state.cls
    fixed = state.fixed
    while queue:
        h = queue.pop()
        pending.discard(h)
        vs = hx.verts[h]
        word = hx.offset[h]
        free: dict[int, int] = {}
        for i in range(6):
            v = vs[i]
            word ^= flips[v] << i
            c = cls[v]
            if not fixed[c]:
                free[c] = free.get(c, 0) | (1 << i)
        if len(free) > max_free:
            continue
        fcls = list(free)
        masks = [free[c] for c in fcls]
        f = len(fcls)
        always = (1 << f) - 1  # classes toggled in every allowed completion
        never = (1 << f) - 1   # classes toggled in none
        ok = False
        for sub in range(1 << f):
            w = word
            for j in range(f):
                if (sub >> j) & 1:
                    w ^= masks[j]
            if _ALLOWED[w]:
                ok = True
                always &= sub
                never &= ~sub
        if not ok:
            return False
        for j in range(f):
            if (always >> j) & 1 or (never >> j) & 1:
                c = fcls[j]
                value = state.val[c] ^ ((always >> j) & 1)
                state.assign(c, value)
                for h2 in hx.by_class.get(c, ()):
                    if h2 not in pending:
                        pending.add(h2)
                        queue.append(h2)
    return True


@dataclass(frozen=True)
class SearchConfig:
    count_only: bool = False
    max_genus: Optional[int] = None
    emit_mirrors: bool = False

    def __post_init__(self):
        if self.max_genus is not None and self.max_genus < 0:
            raise ValueError("max_genus must be >= 0")


@dataclass
class EmbeddingSummary:
    """Per-genus counts of polyhedral embeddings, mirror images identified."""

    per_genus: dict[int, int] = field(default_factory=dict)
    reason: str = "ok"

    @property
    def total(self) -> int:
        return sum(self.per_genus.values())

    @property
    def has_any(self) -> bool:
        return self.total > 0

    @property
    def multi_embedding(self) -> bool:
        return self.total >= 2

    @property
    def multi_genus(self) -> bool:
        return sum(1 for c in self.per_genus.values() if c) >= 2

    @property
    def min_search_genus(self) -> Optional[int]:
        gs = [g for g, c in self.per_genus.items() if c]
        return min(gs) if gs else None

    def add(self, genus: int, count: int = 1) -> None:
        self.per_genus[genus] = self.per_genus.get(genus, 0) + count

    def __add__(self, other: "EmbeddingSummary") -> "EmbeddingSummary":
        out = EmbeddingSummary(dict(self.per_genus))
        for g, c in other.per_genus.items():
            out.add(g, c)
        return out

    def genus_string(self) -> str:
        return " ".join(f"g{g}={c}" for g, c in sorted(self.per_genus.items()) if c)


def summarize(embeddings: Iterable[RotationSystem]) -> EmbeddingSummary:
    """Histogram of genera; ``embeddings`` must not contain mirror pairs."""
    from .embedding import genus

    s = EmbeddingSummary()
    for r in embeddings:
        s.add(genus(r))
    return s


class _Enumerator:
    def __init__(self, g: CubicGraph, cycles: SmallCycleSet, state: ParityState,
                 cfg: SearchConfig, emit: Callable[[tuple[int, ...], int], None]):
        self.g = g
        self.n = g.n
        self.cycles = cycles
        self.state = state
        self.cfg = cfg
        self.emit = emit
        self.hex = _Hexagons(g, cycles, state)
        self.head, self.next0, self.next1 = dart_tables(g)
        self.nodes = 0
        self.fast = FastTracer(self.head, self.next0, self.next1, g.n) if g.n <= MAX_N else None

    def propagate(self, touched) -> bool:
        return hexagon_propagate(self.g, self.cycles, self.state, touched, _hex=self.hex)

    def faces(self):
        head, next0, next1 = self.head, self.next0, self.next1
        flips = self.state.flips
        m = 3 * self.n
        seen = [False] * m
        faces = []
        bits = []
        for d0 in range(m):
            if seen[d0]:
                continue
            vs = []
            b = 0
            d = d0
            while not seen[d]:
                seen[d] = True
                v = d // 3
                vs.append(v)
                b |= 1 << v
                w = head[d]
                d = next1[d] if flips[w] else next0[d]
            faces.append(vs)
            bits.append(b)
        return faces, bits

    def obstruction(self):
        """``(num_faces, best)`` where best is None when polyhedral."""
        if self.fast is not None:
            return self.fast(self.state.flips, self.state.fixed_mask, True)
        faces, bits = self.faces()
        return len(faces), best_obstruction_mask(faces, bits, self.state.fixed_mask, True)

    def record(self, num_faces: int) -> None:
        genus = _euler_genus(self.n, num_faces)
        if self.cfg.max_genus is not None and genus > self.cfg.max_genus:
            return
        self.emit(tuple(self.state.flips), genus)

    def run(self, order: list[int]) -> None:
        self.order = order
        self.phase_classes(0)

    def phase_classes(self, idx: int) -> None:
        st = self.state
        order = self.order
        while idx < len(order) and st.fixed[order[idx]]:
            idx += 1
        if idx == len(order):
            self.phase_vertices()
            return
        c = order[idx]
        for value in (st.val[c], 1 - st.val[c]):
            mark = st.mark()
            st.assign(c, value)
            if self.propagate((c,)):
                self.nodes += 1
                _, best = self.obstruction()
                if best is None or best[0] > 0:
                    self.phase_classes(idx + 1)
            st.undo(mark)

    def phase_vertices(self) -> None:
        self.nodes += 1
        st = self.state
        num_faces, best = self.obstruction()
        if best is None:
            self.record(num_faces)
            free = [v for v in range(self.n) if not st.fixed[st.cls[v]]]
        elif best[0] == 0:
            return
        else:
            m = best[1] & ~st.fixed_mask
            free = [v for v in range(self.n) if (m >> v) & 1]
        orig = {v: st.flips[v] for v in free}
        outer = st.mark()
        for v in free:
            c = st.cls[v]
            if st.fixed[c]:
                if st.flips[v] != orig[v]:
                    # forced away from its original value: this is the only live branch
                    self.phase_vertices()
                    break
                continue
            mark = st.mark()
            st.assign(c, st.val[c] ^ 1)
            if self.propagate((c,)):
                self.phase_vertices()
            st.undo(mark)
            st.assign(c, st.val[c])
            if not self.propagate((c,)):
                break
        st.undo(outer)


def _class_order(state: ParityState) -> tuple[int, list[int]]:
    """Pinned class and the branching order of the other non-trivial classes."""
    key = [(-len(m), m[0], c) for c, m in enumerate(state.members)]
    key.sort()
    anchor = key[0][2]
    order = [c for _, _, c in key[1:] if len(state.members[c]) > 1]
    return anchor, order


def enumerate_polyhedral(g: CubicGraph, cfg: SearchConfig = SearchConfig(),
                         cycles: Optional[SmallCycleSet] = None,
                         ) -> tuple[list[RotationSystem], EmbeddingSummary]:
    """All polyhedral embeddings of ``g``, one per mirror pair.

    With ``cfg.emit_mirrors`` the mirror image of each embedding is listed
    right after it; the summary always counts mirror pairs once.  With
    ``cfg.count_only`` the list is empty.  ``summary.reason`` tells why a
    graph was rejected before the search (``not-3-connected``,
    ``parity-conflict``, ``hexagon-conflict``).
    """
    summary = EmbeddingSummary()
    out: list[RotationSystem] = []
    if connectivity_class(g) != Connectivity.THREE:
        summary.reason = "not-3-connected"
        return out, summary
    cycles = cycles or small_cycles(g)
    state = compute_classes(g, cycles)
    if isinstance(state, Infeasible):
        summary.reason = "parity-conflict"
        return out, summary

    def emit(flips: tuple[int, ...], genus: int) -> None:
        summary.add(genus)
        if cfg.count_only:
            return
        out.append(RotationSystem(g, flips))
        if cfg.emit_mirrors:
            out.append(RotationSystem(g, [1 - f for f in flips]))

    anchor, order = _class_order(state)
    state.anchor = anchor
    en = _Enumerator(g, cycles, state, cfg, emit)
    state.assign(anchor, 0)
    if not en.propagate(None):
        summary.reason = "hexagon-conflict"
        return out, summary
    _, best = en.obstruction()
    if best is None or best[0] > 0:
        en.run(order)
    return out, summary
