"""Compiled face tracing and obstruction choice for graphs with at most 64 vertices.

Mirrors :func:`polyembed.embedding.best_obstruction_mask` exactly; the
search uses it per node and the tests hold the two against each other.
"""

from __future__ import annotations

import numba
import numpy as np

MAX_N = 64


@numba.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - numba.uint64(1)
        c += 1
    return c


@numba.njit(cache=True)
def _lex_less(a, b):
    x = a ^ b
    if x == 0:
        return False
    low = x & (~x + numba.uint64(1))
    below = low - numba.uint64(1)
    if a & low:
        return (b & ~below) != 0
    return (a & ~below) == 0


@numba.njit(cache=True)
def trace_and_obstruct(head, next0, next1, flips, n, fixed_mask, stop_at_fixed, seen, walk, starts, bits):
    """Returns ``(num_faces, unfixed_count, mask)``; count ``-1`` means polyhedral.

    ``seen``, ``walk``, ``starts`` and ``bits`` are scratch arrays of
    length ``3n``, ``3n``, ``3n + 1`` and ``3n``.
    """
    m3 = 3 * n
    one = numba.uint64(1)
    zero = numba.uint64(0)
    for d in range(m3):
        seen[d] = 0
    nf = 0
    pos = 0
    for d0 in range(m3):
        if seen[d0]:
            continue
        starts[nf] = pos
        b = zero
        d = d0
        while not seen[d]:
            seen[d] = 1
            v = d // 3
            walk[pos] = v
            pos += 1
            b |= one << numba.uint64(v)
            w = head[d]
            if flips[w]:
                d = next1[d]
            else:
                d = next0[d]
        bits[nf] = b
        nf += 1
    starts[nf] = pos

    best_cnt = -1
    best_m = zero
    for fi in range(nf):
        s = starts[fi]
        k = starts[fi + 1] - s
        if _popcount(bits[fi]) == k:
            continue
        seenb = zero
        dup = zero
        for a in range(k):
            bit = one << numba.uint64(walk[s + a])
            if seenb & bit:
                dup |= bit
            seenb |= bit
        for a in range(k):
            v = walk[s + a]
            if not (dup >> numba.uint64(v)) & one:
                continue
            m = one << numba.uint64(v)
            cnt = 0 if fixed_mask & m else 1
            i = a + 1
            closed = False
            while True:
                u = walk[s + (i % k)]
                if u == v:
                    closed = True
                    break
                bit = one << numba.uint64(u)
                if not m & bit:
                    m |= bit
                    if not fixed_mask & bit:
                        cnt += 1
                        if best_cnt >= 0 and cnt > best_cnt:
                            break
                i += 1
            if not closed:
                continue
            if best_cnt < 0 or cnt < best_cnt or (cnt == best_cnt and _lex_less(m, best_m)):
                best_cnt = cnt
                best_m = m
                if stop_at_fixed and cnt == 0:
                    return nf, 0, best_m
    free = ~fixed_mask
    for i in range(nf):
        bi = bits[i]
        for j in range(i + 1, nf):
            if _popcount(bi & bits[j]) > 2:
                m = bi | bits[j]
                cnt = _popcount(m & free)
                if best_cnt < 0 or cnt < best_cnt or (cnt == best_cnt and _lex_less(m, best_m)):
                    best_cnt = cnt
                    best_m = m
                    if stop_at_fixed and cnt == 0:
                        return nf, 0, best_m
    return nf, best_cnt, best_m


class FastTracer:
    """Holds the dart tables and scratch buffers for one graph."""

    def __init__(self, head, next0, next1, n: int):
        if n > MAX_N:
            raise ValueError(f"compiled tracer supports n <= {MAX_N}")
        self.n = n
        self.head = np.asarray(head, np.int64)
        self.next0 = np.asarray(next0, np.int64)
        self.next1 = np.asarray(next1, np.int64)
        m = 3 * n
        self.seen = np.zeros(m, np.uint8)
        self.walk = np.zeros(m, np.int64)
        self.starts = np.zeros(m + 1, np.int64)
        self.bits = np.zeros(m, np.uint64)

    def __call__(self, flips, fixed_mask: int, stop_at_fixed: bool):
        """``(num_faces, None)`` when polyhedral, else ``(num_faces, (count, mask))``."""
        nf, cnt, m = trace_and_obstruct(
            self.head, self.next0, self.next1, np.asarray(flips, np.uint8), self.n,
            np.uint64(fixed_mask), stop_at_fixed, self.seen, self.walk, self.starts, self.bits,
        )
        if cnt < 0:
            return nf, None
        return nf, (int(cnt), int(m))
