"""Shared builders and independent brute-force oracles.

Oracles here deliberately avoid the library's production algorithms: cycle
enumeration is plain path DFS (the library's shortest-cycle search goes
through the double cover), switching orbits are flood-filled over bit-packed
signings (the library counts classes via cotree patterns), and reference
eigenvalues come from numpy's eigh (the library uses its own Jacobi).
"""

from __future__ import annotations

import random
from itertools import permutations

from signedspectra import SignedGraph


def random_signed_graph(
    rng: random.Random, n: int, edge_prob: float = 0.5, neg_prob: float = 0.5
) -> SignedGraph:
    table = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                table[(u, v)] = -1 if rng.random() < neg_prob else 1
    return SignedGraph(n, table)


def brute_cycles_dfs(g: SignedGraph):
    """All simple cycles as (vertices, sign), each once, by anchored path DFS."""
    n = g.n
    adj = g.adjacency_lists()
    out = []

    def extend(path, in_path, sgn):
        last = path[-1]
        start = path[0]
        if len(path) >= 3 and g.has_edge(last, start) and path[1] < last:
            out.append((tuple(path), sgn * g.sign(last, start)))
        for w in adj[last]:
            if w <= start or in_path[w]:
                continue
            in_path[w] = True
            path.append(w)
            extend(path, in_path, sgn * g.sign(last, w))
            path.pop()
            in_path[w] = False

    for s in range(n):
        in_path = [False] * n
        in_path[s] = True
        extend([s], in_path, 1)
    return out


def brute_cycles_permutations(g: SignedGraph, k: int):
    """All k-cycles as (vertices, sign) via raw permutations; tiny n only."""
    out = []
    for anchor in range(g.n):
        others = [v for v in range(g.n) if v > anchor]
        for rest in permutations(others, k - 1):
            if rest[0] > rest[-1]:
                continue  # one direction per cycle
            cyc = (anchor,) + rest
            ok = True
            sgn = 1
            for i in range(k):
                u, v = cyc[i], cyc[(i + 1) % k]
                s = g.sign(u, v)
                if s == 0:
                    ok = False
                    break
                sgn *= s
            if ok:
                out.append((cyc, sgn))
    return out


def brute_shortest_negative_length(g: SignedGraph):
    neg = [len(c) for c, s in brute_cycles_dfs(g) if s < 0]
    return min(neg) if neg else None


def _edge_list(g: SignedGraph):
    return sorted(g.edge_set())


def brute_switching_orbit_count(g: SignedGraph) -> int:
    """Number of switching orbits over all 2^m signings, by flood fill.

    Signings are bitmasks over the sorted edge list (bit=1 means negative);
    switching at one vertex XORs the incident-edge mask.  Orbit count is the
    number of connected components of that action.
    """
    edges = _edge_list(g)
    m = len(edges)
    vert_mask = [0] * g.n
    for i, (u, v) in enumerate(edges):
        vert_mask[u] |= 1 << i
        vert_mask[v] |= 1 << i
    seen = bytearray(1 << m)
    orbits = 0
    for s0 in range(1 << m):
        if seen[s0]:
            continue
        orbits += 1
        stack = [s0]
        seen[s0] = 1
        while stack:
            s = stack.pop()
            for vm in vert_mask:
                t = s ^ vm
                if not seen[t]:
                    seen[t] = 1
                    stack.append(t)
    return orbits


def brute_switching_orbit_of(g: SignedGraph) -> set[int]:
    """All signings (as bitmasks over sorted edges) reachable from g by switching."""
    edges = _edge_list(g)
    sign_bit = {e: 0 if g.sign(*e) > 0 else 1 for e in edges}
    s0 = 0
    for i, e in enumerate(edges):
        s0 |= sign_bit[e] << i
    vert_mask = [0] * g.n
    for i, (u, v) in enumerate(edges):
        vert_mask[u] |= 1 << i
        vert_mask[v] |= 1 << i
    orbit = {s0}
    stack = [s0]
    while stack:
        s = stack.pop()
        for vm in vert_mask:
            t = s ^ vm
            if t not in orbit:
                orbit.add(t)
                stack.append(t)
    return orbit


def signing_bitmask(g: SignedGraph) -> int:
    mask = 0
    for i, e in enumerate(_edge_list(g)):
        if g.sign(*e) < 0:
            mask |= 1 << i
    return mask


def random_fundamental_cycle(rng: random.Random, g: SignedGraph):
    """A random cycle (vertex tuple) from a BFS tree plus one cotree edge."""
    from collections import deque

    adj = g.adjacency_lists()
    parent = [-2] * g.n
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        q = deque([root])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    q.append(w)
    tree = set()
    for v in range(g.n):
        if parent[v] >= 0:
            tree.add((min(v, parent[v]), max(v, parent[v])))
    cotree = [e for e in _edge_list(g) if e not in tree]
    if not cotree:
        return None
    u, v = rng.choice(cotree)
    anc_u = [u]
    while parent[anc_u[-1]] != -1:
        anc_u.append(parent[anc_u[-1]])
    anc_v = [v]
    while parent[anc_v[-1]] != -1:
        anc_v.append(parent[anc_v[-1]])
    pos = {x: i for i, x in enumerate(anc_u)}
    for j, x in enumerate(anc_v):
        if x in pos:
            path = anc_u[: pos[x]] + anc_v[: j + 1][::-1]
            return tuple(path) if len(path) >= 3 else None
    return None
