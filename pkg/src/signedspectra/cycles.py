"""Cycle signs and negative-cycle detection.

The sign of a cycle is the product of its edge signs; a cycle is negative
exactly when it carries an odd number of negative edges.  Fixed-length
negative cycles are found by exhaustive path extension; the shortest
negative cycle is found through the parity double cover, where a negative
closed walk through v corresponds to a path between the two lifts of v.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .core import SignedGraph

__all__ = [
    "CycleWitness",
    "cycle_sign",
    "find_negative_ck",
    "is_ck_negative_free",
    "shortest_negative_cycle",
    "double_cover",
]


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given as its vertex sequence (closed implicitly) plus its sign."""

    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            out.append((u, v) if u < v else (v, u))
        return out


def _validate_cycle(g: SignedGraph, seq: Sequence[int]) -> None:
    if len(seq) < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise ValueError("cycle vertices must be distinct")
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge, sequence is not a cycle")


def cycle_sign(g: SignedGraph, seq: Sequence[int]) -> int:
    """Product of edge signs along the closed sequence; -1 iff odd negatives."""
    _validate_cycle(g, seq)
    s = 1
    for i, u in enumerate(seq):
        s *= g.sign(u, seq[(i + 1) % len(seq)])
    return s


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the minimum vertex leads and its smaller neighbor follows."""
    vs = list(seq)
    k = len(vs)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def witness(g: SignedGraph, seq: Sequence[int]) -> CycleWitness:
    """Build a canonical CycleWitness after validating the sequence."""
    return CycleWitness(canonical_cycle(seq), cycle_sign(g, seq))


def find_negative_ck(g: SignedGraph, k: int) -> CycleWitness | None:
    """Some negative cycle of length exactly k, or None.

    Exhaustive DFS over paths anchored at their minimum vertex, with the
    direction fixed by second vertex < last vertex, so each cycle is
    visited once.  Returns the first hit in that deterministic order.
    """
    n = g.n
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    if k > n:
        return None
    adj = g.adjacency_lists()

    path = [0] * k
    in_path = [False] * n

    def extend(depth: int, last: int, start: int, sgn: int) -> tuple[int, ...] | None:
        if depth == k:
            if g.has_edge(last, start):
                if path[1] < last and sgn * g.sign(last, start) < 0:
                    return tuple(path)
            return None
        for w in adj[last]:
            if w <= start or in_path[w]:
                continue
            path[depth] = w
            in_path[w] = True
            hit = extend(depth + 1, w, start, sgn * g.sign(last, w))
            in_path[w] = False
            if hit is not None:
                return hit
        return None

    for start in range(n):
        path[0] = start
        in_path[start] = True
        hit = extend(1, start, start, 1)
        in_path[start] = False
        if hit is not None:
            return CycleWitness(canonical_cycle(hit), -1)
    return None


def is_ck_negative_free(g: SignedGraph, k: int) -> bool:
    """True iff g has no negative cycle of length exactly k."""
    return find_negative_ck(g, k) is None


def double_cover(g: SignedGraph) -> SignedGraph:
    """Parity double cover on 2n vertices, returned all-positive.

    Vertex v lifts to v (even parity) and v + n (odd parity).  An edge uv
    preserves parity when positive and swaps it when negative, so closed
    walks that flip parity are exactly the negative ones.  The cover has
    twice as many components as g iff g is balanced.
    """
    n = g.n
    table: dict[tuple[int, int], int] = {}
    for u, v, s in g.edges():
        if s > 0:
            table[(u, v)] = 1
            table[(u + n, v + n)] = 1
        else:
            a, b = sorted((u, v + n))
            table[(a, b)] = 1
            a, b = sorted((u + n, v))
            table[(a, b)] = 1
    return SignedGraph(2 * n, table)


def _extract_negative_cycle(g: SignedGraph, walk: list[int]) -> list[int]:
    """Reduce a closed negative walk to a simple negative cycle, no longer.

    Splitting a closed walk at a repeated vertex yields two closed walks
    whose signs multiply to the original, so one part of a negative walk is
    always negative; excising the positive part strictly shortens the walk.
    """
    # walk is closed with walk[0] == walk[-1]
    while True:
        seen: dict[int, int] = {}
        cut = None
        for i, v in enumerate(walk[:-1]):
            if v in seen:
                cut = (seen[v], i)
                break
            seen[v] = i
        if cut is None:
            return walk[:-1]
        i, j = cut
        inner = walk[i : j + 1]
        s = 1
        for a, b in zip(inner, inner[1:]):
            s *= g.sign(a, b)
        if s < 0:
            walk = inner
        else:
            walk = walk[:i] + walk[j:]


def shortest_negative_cycle(g: SignedGraph) -> CycleWitness | None:
    """A negative cycle of minimum length, or None when g is balanced.

    For every vertex v, a breadth-first search in the double cover from the
    even lift of v to its odd lift finds the shortest negative closed walk
    through v; the global minimum over v, reduced to a simple cycle, is a
    shortest negative cycle.  Ties break to the lexicographically least
    canonical witness.
    """
    n = g.n
    cover = double_cover(g)
    cadj = cover.adjacency_lists()
    best: tuple[int, tuple[int, ...]] | None = None
    for v in range(n):
        # BFS from v (even lift) to v + n (odd lift)
        parent = [-1] * (2 * n)
        parent[v] = v
        q = deque([v])
        found = False
        while q and not found:
            cur = q.popleft()
            for w in cadj[cur]:
                if parent[w] == -1:
                    parent[w] = cur
                    if w == v + n:
                        found = True
                        break
                    q.append(w)
        if not found:
            continue
        lifted = [v + n]
        while lifted[-1] != v:
            lifted.append(parent[lifted[-1]])
        walk = [x % n for x in lifted]
        cyc = _extract_negative_cycle(g, walk)
        key = (len(cyc), canonical_cycle(cyc))
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return CycleWitness(best[1], -1)
