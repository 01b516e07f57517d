"""Maximum matchings: blossom algorithm plus a small exhaustive oracle.

The blossom implementation is the classic O(V^3) base/parent contraction
version; it handles odd cycles that the bipartite augmenting-path scheme
cannot.  The oracle enumerates every matching outright and exists to check
the fast path on small graphs.
"""
from __future__ import annotations

from collections import deque

from .graphs import GraphError, Matching, SimpleGraph

ORACLE_EDGE_CAP = 24


def maximum_matching(g: SimpleGraph) -> Matching:
    """Maximum matching via blossom contraction; deterministic for a given graph."""
    n = g.n
    adj = g.adjacency
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_path(x: int, b: int, child: int, blossom: list[bool]):
        while base[x] != b:
            blossom[base[x]] = True
            blossom[base[match[x]]] = True
            parent[x] = child
            child = match[x]
            x = parent[match[x]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom around its stem
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        tail = find_augmenting(root)
        while tail != -1:
            prev = parent[tail]
            hop = match[prev]
            match[tail] = prev
            match[prev] = tail
            tail = hop

    edges = frozenset((v, match[v]) for v in range(n) if v < match[v])
    return Matching(edges)


def maximum_matching_oracle(g: SimpleGraph) -> Matching:
    """Exhaustive maximum matching by branching on the lowest unsaturated vertex."""
    if g.m > ORACLE_EDGE_CAP:
        raise GraphError(f"oracle limited to {ORACLE_EDGE_CAP} edges, got {g.m}")
    adj = g.adjacency
    n = g.n
    best: list[tuple[int, int]] = []

    def rec(v: int, used: int, chosen: list[tuple[int, int]]):
        nonlocal best
        while v < n and ((used >> v) & 1 or not adj[v]):
            v += 1
        if v >= n:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        rec(v + 1, used | (1 << v), chosen)  # leave v unmatched
        for u in adj[v]:
            if not (used >> u) & 1:
                chosen.append((v, u) if v < u else (u, v))
                rec(v + 1, used | (1 << v) | (1 << u), chosen)
                chosen.pop()

    rec(0, 0, [])
    return Matching(frozenset(best))
