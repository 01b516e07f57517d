"""Graph core: families, structure report, cycles, random generators."""
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gainspectra.graphs import (
    GraphError,
    SimpleGraph,
    bipartition,
    book,
    clique_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    double_star,
    girth,
    induced_subgraph,
    named_family,
    path_graph,
    random_connected_graph,
    random_graph,
    random_tree,
    random_unicyclic,
    simple_cycles,
    stats,
    t1_tree,
)


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    return h


def test_family_shapes():
    assert path_graph(5).m == 4
    assert cycle_graph(5).m == 5
    assert complete_graph(5).m == 10
    assert complete_bipartite_graph(2, 3).m == 6
    ds = double_star(2, 3)
    assert ds.n == 7 and ds.m == 6
    assert ds.degree(0) == 3 and ds.degree(1) == 4
    bk = book(1, 2, 3)
    assert bk.n == 2 + 1 + 2 + 3 and bk.m == 1 + 1 + 2 + 6
    assert bk.max_edge_degree == bk.degree(0) + bk.degree(1) - 2


def test_t1_tree_is_balanced_double_star():
    for de in range(0, 9):
        t = t1_tree(de)
        assert t.max_edge_degree == de
        p, q = de // 2, (de + 1) // 2
        assert sorted((t.degree(0), t.degree(1))) == sorted((p + 1, q + 1))


def test_named_family_dispatch():
    assert named_family("cycle", [6]) == cycle_graph(6)
    assert named_family("complete-bipartite", [2, 3]) == complete_bipartite_graph(2, 3)
    assert named_family("t1", [5]) == t1_tree(5)
    with pytest.raises(GraphError):
        named_family("mystery", [3])
    with pytest.raises(GraphError):
        named_family("cycle", [2])


def test_from_edges_validation():
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(3, [(0, 5)])
    g = SimpleGraph.from_edges(3, [(1, 0), (0, 1)])
    assert g.m == 1 and g.edge_list == ((0, 1),)


def test_stats_against_networkx():
    rng = random.Random(11)
    for _ in range(120):
        g = random_graph(rng, rng.randrange(1, 11), rng.choice([0.15, 0.35, 0.6, 0.9]))
        h = to_nx(g)
        s = stats(g)
        assert s.degree_sequence == tuple(dict(h.degree)[v] for v in range(g.n))
        assert s.connected == (g.n <= 1 or nx.is_connected(h))
        assert s.triangle_free == (sum(nx.triangles(h).values()) == 0)
        nx_girth = nx.girth(h)
        assert (s.girth or float("inf")) == nx_girth
        assert s.clique_number == max((len(c) for c in nx.find_cliques(h)), default=0)
        assert (s.bipartition is not None) == nx.is_bipartite(h)
        if s.bipartition is not None:
            a, b = s.bipartition
            assert a | b == frozenset(range(g.n)) and not (a & b)
            for u, v in g.edge_list:
                assert (u in a) != (v in a)


def test_max_edge_degree_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randrange(2, 10), 0.5)
        if g.m == 0:
            assert g.max_edge_degree is None
            continue
        want = max(g.degree(u) + g.degree(v) - 2 for u, v in g.edge_list)
        assert g.max_edge_degree == want


def test_simple_cycles_against_networkx():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, rng.randrange(3, 9), 0.45)
        mine = set(simple_cycles(g))
        theirs = set()
        for cyc in nx.simple_cycles(to_nx(g)):
            if len(cyc) < 3:
                continue
            i = cyc.index(min(cyc))
            rot = cyc[i:] + cyc[:i]
            if rot[1] > rot[-1]:
                rot = [rot[0]] + rot[1:][::-1]
            theirs.add(tuple(rot))
        assert mine == theirs


def test_components_partition():
    rng = random.Random(2)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 12), 0.2)
        comps = g.components
        seen = [v for comp in comps for v in comp]
        assert sorted(seen) == list(range(g.n))
        labels = {v: i for i, comp in enumerate(comps) for v in comp}
        for u, v in g.edge_list:
            assert labels[u] == labels[v]


def test_disjoint_union_and_induced():
    g = disjoint_union(cycle_graph(3), path_graph(2))
    assert g.n == 5 and g.m == 4
    assert girth(g) == 3
    sub = induced_subgraph(g, [0, 1, 2])
    assert sub == cycle_graph(3)
    sub2 = induced_subgraph(g, [3, 4])
    assert sub2.m == 1


def test_random_generators():
    rng = random.Random(9)
    for n in range(1, 12):
        t = random_tree(rng, n)
        assert t.m == n - 1 and t.connected
    for n in range(2, 12):
        g = random_connected_graph(rng, n, rng.randrange(0, 5))
        assert g.connected
    for n in range(3, 12):
        g = random_unicyclic(rng, n)
        assert g.unicyclic and g.m == g.n
    g = random_unicyclic(rng, 8, cycle_length=5)
    assert girth(g) == 5
    with pytest.raises(GraphError):
        random_unicyclic(rng, 4, cycle_length=2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.data())
def test_degree_sum_is_twice_edges(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = SimpleGraph.from_edges(n, chosen)
    assert sum(g.degrees) == 2 * g.m
    assert girth(g) is None or girth(g) >= 3
