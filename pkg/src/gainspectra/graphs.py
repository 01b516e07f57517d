"""Simple undirected graphs: construction, named families, and structure queries.

Vertices are 0..n-1; edges are canonical pairs (u, v) with u < v.  Everything
downstream (gains, spectra, polynomial enumeration) builds on the frozen
`SimpleGraph` here, so instances are hashable and safe to memoize on.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Edge = tuple[int, int]

CLIQUE_VERTEX_CAP = 32
CYCLE_ENUMERATION_CAP = 10_000


class GraphError(ValueError):
    """Malformed graph input or a structure query outside its supported range."""


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) not canonical within 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "SimpleGraph":
        """Build from any iterable of vertex pairs; orientation and duplicates are normalized."""
        canon = set()
        for u, v in pairs:
            canon.add(canonical_edge(u, v))
        return cls(n, frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edge_list:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    @cached_property
    def max_edge_degree(self) -> int | None:
        """Largest d(u)+d(v)-2 over edges uv; None for edgeless graphs."""
        if not self.edges:
            return None
        deg = self.degrees
        return max(deg[u] + deg[v] - 2 for u, v in self.edges)

    @cached_property
    def triangle_free(self) -> bool:
        masks = self.neighbor_masks
        return all(not (masks[u] & masks[v]) for u, v in self.edges)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            comp = [root]
            seen[root] = True
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def unicyclic(self) -> bool:
        return self.connected and self.m == self.n


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge]

    def __post_init__(self):
        used = set()
        for u, v in self.edges:
            if u in used or v in used:
                raise GraphError("matching edges share a vertex")
            used.add(u)
            used.add(v)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def covered(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)


@dataclass(frozen=True)
class GraphStats:
    """Aggregate structure report for one graph."""

    degree_sequence: tuple[int, ...]
    min_degree: int
    max_degree: int
    max_edge_degree: int | None
    girth: int | None
    triangle_free: bool
    clique_number: int
    bipartition: tuple[frozenset[int], frozenset[int]] | None
    connected: bool
    unicyclic: bool


def girth(g: SimpleGraph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    For each edge uv, the shortest cycle through that edge is 1 plus the
    u-v distance with the edge removed; the minimum over edges is exact.
    """
    best = None
    for u, v in g.edge_list:
        dist = _bfs_distance_avoiding(g, u, v, (u, v))
        if dist is not None and (best is None or dist + 1 < best):
            best = dist + 1
            if best == 3:
                return 3
    return best


def _bfs_distance_avoiding(g: SimpleGraph, src: int, dst: int, skip: Edge) -> int | None:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            return dist[x]
        for y in g.adjacency[x]:
            if canonical_edge(x, y) == skip:
                continue
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def bipartition(g: SimpleGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-coloring by BFS, or None if any component has an odd cycle.

    Each component's root (its lowest vertex) goes in the first part, so the
    result is deterministic.
    """
    color = [-1] * g.n
    for comp in g.components:
        root = comp[0]
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    part0 = frozenset(v for v in range(g.n) if color[v] == 0)
    part1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return part0, part1


def clique_number(g: SimpleGraph) -> int:
    """Exact maximum clique size by branch and bound; capped at 32 vertices."""
    if g.n > CLIQUE_VERTEX_CAP:
        raise GraphError(f"clique number supported only up to {CLIQUE_VERTEX_CAP} vertices, got {g.n}")
    if g.n == 0:
        return 0
    masks = g.neighbor_masks
    best = 1

    def grow(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(cand & masks[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best


def stats(g: SimpleGraph) -> GraphStats:
    deg = g.degrees
    return GraphStats(
        degree_sequence=deg,
        min_degree=min(deg) if g.n else 0,
        max_degree=max(deg) if g.n else 0,
        max_edge_degree=g.max_edge_degree,
        girth=girth(g),
        triangle_free=g.triangle_free,
        clique_number=clique_number(g),
        bipartition=bipartition(g),
        connected=g.connected,
        unicyclic=g.unicyclic,
    )


def simple_cycles(g: SimpleGraph, cap: int = CYCLE_ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All simple cycles, each once, as canonical vertex tuples.

    Canonical form: the cycle's lowest vertex first, then the lower of its two
    cycle neighbors.  Enumeration roots a DFS at each vertex in turn, keeping
    only paths whose intermediate vertices exceed the root.
    """
    out: list[tuple[int, ...]] = []
    masks = g.neighbor_masks
    for root in range(g.n):
        allowed = ~((1 << (root + 1)) - 1)  # strictly above root
        # path stack entries: (vertex, iterator-position mask of remaining nbrs)
        path = [root]
        onpath = 1 << root
        iters = [[y for y in g.adjacency[root] if y > root]]
        while iters:
            frontier = iters[-1]
            if not frontier:
                iters.pop()
                onpath &= ~(1 << path.pop())
                continue
            y = frontier.pop()
            if onpath & (1 << y):
                continue
            if len(path) >= 2 and masks[y] & (1 << root) and path[1] < y:
                cyc = tuple(path) + (y,)
                out.append(cyc)
                if len(out) > cap:
                    raise GraphError(f"more than {cap} simple cycles")
            path.append(y)
            onpath |= 1 << y
            iters.append([z for z in g.adjacency[y] if (allowed >> z) & 1 and not (onpath >> z) & 1])
    out.sort(key=lambda c: (len(c), c))
    return out


# ---------------------------------------------------------------- families

def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    if n < 0:
        raise GraphError("negative vertex count")
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> SimpleGraph:
    if a < 0 or b < 0 or a + b == 0:
        raise GraphError("parts must be nonnegative and not both empty")
    return SimpleGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def double_star(p: int, q: int) -> SimpleGraph:
    """Tree on p+q+2 vertices: centers 0-1 joined, p leaves on 0, q leaves on 1."""
    if p < 0 or q < 0:
        raise GraphError("leaf counts must be nonnegative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + j) for j in range(q)]
    return SimpleGraph.from_edges(p + q + 2, edges)


def book(p: int, q: int, r: int) -> SimpleGraph:
    """Double star on centers 0-1 plus r extra vertices adjacent to both centers."""
    if p < 0 or q < 0 or r < 0:
        raise GraphError("counts must be nonnegative")
    n = p + q + r + 2
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + j) for j in range(q)]
    for k in range(r):
        t = 2 + p + q + k
        edges += [(0, t), (1, t)]
    return SimpleGraph.from_edges(n, edges)


def t1_tree(max_edge_degree: int) -> SimpleGraph:
    """The balanced double star whose single interior edge has the given edge degree."""
    if max_edge_degree < 0:
        raise GraphError("edge degree must be nonnegative")
    return double_star(max_edge_degree // 2, (max_edge_degree + 1) // 2)


_FAMILY_BUILDERS = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete-bipartite": (complete_bipartite_graph, 2),
    "double-star": (double_star, 2),
    "book": (book, 3),
    "t1": (t1_tree, 1),
}


def named_family(kind: str, params: tuple[int, ...]) -> SimpleGraph:
    """Dispatch to a named family builder; raises GraphError on unknown kind or arity."""
    if kind not in _FAMILY_BUILDERS:
        known = ", ".join(sorted(_FAMILY_BUILDERS))
        raise GraphError(f"unknown family {kind!r} (known: {known})")
    fn, arity = _FAMILY_BUILDERS[kind]
    if len(params) != arity:
        raise GraphError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edge_list]
        offset += g.n
    return SimpleGraph.from_edges(offset, edges)


def induced_subgraph(g: SimpleGraph, vertices) -> SimpleGraph:
    """Subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edge_list if u in index and v in index]
    return SimpleGraph.from_edges(len(keep), edges)


# ------------------------------------------------------- random generators

def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def random_tree(rng: random.Random, n: int) -> SimpleGraph:
    """Uniform-ish random tree: each vertex i>=1 attaches to a random earlier vertex."""
    if n < 1:
        raise GraphError("tree needs at least one vertex")
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return SimpleGraph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> SimpleGraph:
    """Random tree plus up to extra_edges additional random non-edges."""
    g = random_tree(rng, n)
    edges = set(g.edges)
    non_edges = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(non_edges)
    edges.update(non_edges[:extra_edges])
    return SimpleGraph.from_edges(n, edges)


def random_unicyclic(rng: random.Random, n: int, cycle_length: int | None = None) -> SimpleGraph:
    """Connected graph with exactly one cycle: a cycle with random tree attachments."""
    r = cycle_length if cycle_length is not None else rng.randrange(3, max(4, n + 1))
    if not (3 <= r <= n):
        raise GraphError(f"cycle length {r} out of range for {n} vertices")
    edges = [(i, (i + 1) % r) for i in range(r)]
    for i in range(r, n):
        edges.append((rng.randrange(i), i))
    return SimpleGraph.from_edges(n, edges)
