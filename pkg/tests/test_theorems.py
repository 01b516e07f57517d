"""Verification harness: bound checkers, decomposition, sweeps, witnesses."""
import random
from math import sqrt

import pytest

from gainspectra import gains as gn
from gainspectra.gains import GainGraph, random_gains
from gainspectra.graphs import (
    SimpleGraph,
    book,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    double_star,
    path_graph,
    random_graph,
    random_unicyclic,
)
from gainspectra.matching import maximum_matching
from gainspectra.spectral import energy
from gainspectra.theorems import (
    DecompositionError,
    check_degree_bounds,
    check_matching_bounds,
    check_unicyclic,
    corpus,
    is_balanced_complete_bipartite,
    matching_decomposition,
    nonequienergetic_witness,
    straddle_search,
    sweep_unicyclic,
    t1_energy,
    verify_suite,
    whole_graph_star_book_shape,
)


def by_name(results):
    return {r.name: r for r in results}


def test_t1_energy_closed_forms_match_eigensolver():
    for de in range(0, 9):
        direct = energy(GainGraph.all_ones(double_star(de // 2, (de + 1) // 2))).energy
        assert abs(t1_energy(de) - direct) < 1e-10


def test_degree_bounds_equality_on_balanced_complete_bipartite():
    rng = random.Random(1)
    from gainspectra.theorems import _random_switch
    phi = _random_switch(GainGraph.all_ones(complete_bipartite_graph(2, 3)), rng)
    res = by_name(check_degree_bounds(phi))
    assert res["vertex_energy_degree_bound"].equality
    assert res["energy_edge_count_bound"].equality
    assert "balanced complete bipartite" in res["vertex_energy_degree_bound"].classifier_verdict
    # equal parts needed for the triangle-free bound to be tight
    assert not res["triangle_free_energy_bound"].equality
    phi = _random_switch(GainGraph.all_ones(complete_bipartite_graph(3, 3)), rng)
    res = by_name(check_degree_bounds(phi))
    assert res["triangle_free_energy_bound"].equality


def test_degree_bound_equality_needs_every_vertex():
    # the middle vertex of a balanced P5 attains degree/rho exactly, the
    # others do not: the equality flag must stay off
    phi = GainGraph.all_ones(path_graph(5))
    r = by_name(check_degree_bounds(phi))["vertex_energy_degree_bound"]
    rho = energy(phi).spectral_radius
    assert abs(energy(phi).vertex_energies[2] - 2.0 / rho) < 1e-12
    assert r.holds and not r.equality and r.classifier_verdict is None


def test_degree_bounds_skip_conditions():
    res = by_name(check_degree_bounds(GainGraph.all_ones(SimpleGraph.from_edges(3, []))))
    assert all(r.skipped for r in res.values())
    res = by_name(check_degree_bounds(GainGraph.all_ones(disjoint_union(path_graph(2), path_graph(2)))))
    assert all(r.skipped for r in res.values())
    res = by_name(check_degree_bounds(GainGraph.all_ones(complete_graph(3))))
    assert res["triangle_free_energy_bound"].skipped
    assert not res["vertex_energy_degree_bound"].skipped


def test_degree_bounds_hold_on_random_connected():
    from gainspectra.graphs import random_connected_graph
    rng = random.Random(2)
    for s in range(50):
        g = random_connected_graph(rng, rng.randrange(2, 10), rng.randrange(0, 8))
        for r in check_degree_bounds(random_gains(g, s)):
            assert r.holds


def test_balanced_complete_bipartite_classifier():
    rng = random.Random(3)
    from gainspectra.theorems import _random_switch
    assert is_balanced_complete_bipartite(_random_switch(GainGraph.all_ones(complete_bipartite_graph(2, 4)), rng))
    assert is_balanced_complete_bipartite(GainGraph.all_ones(path_graph(3)))  # P3 = K_{1,2}
    assert not is_balanced_complete_bipartite(GainGraph.all_ones(path_graph(4)))
    assert not is_balanced_complete_bipartite(GainGraph.all_ones(complete_graph(3)))
    # unbalanced gains on K_{2,2}
    phi = gn.with_cycle_gain(cycle_graph(4), 1j)
    assert not is_balanced_complete_bipartite(phi)


def test_decomposition_crosswise_on_k4():
    result = matching_decomposition(complete_graph(4))
    assert len(result.pieces) == 2
    assert all(p.shape == "double_star" for p in result.pieces)
    assert {p.matching_edge for p in result.pieces} == {(0, 1), (2, 3)}


def test_decomposition_piece_invariants():
    rng = random.Random(4)
    for s in range(120):
        g = random_graph(rng, rng.randrange(2, 14), rng.choice([0.2, 0.4, 0.7, 1.0]))
        if g.m == 0:
            continue
        mu = maximum_matching(g).size
        result = matching_decomposition(g)
        assert len(result.pieces) == mu
        seen = set()
        for p in result.pieces:
            assert p.matching_edge in p.edges
            assert len(p.apexes) <= 1
            a, b = p.matching_edge
            d_e = g.degree(a) + g.degree(b) - 2
            assert len(p.edges) - 1 <= d_e
            for e in p.edges:
                assert e not in seen
                seen.add(e)
                assert a in e or b in e
        assert seen == set(g.edge_list)


def test_decomposition_rejects_non_maximum_matching():
    from gainspectra.graphs import Matching
    g = path_graph(4)
    with pytest.raises(DecompositionError):
        matching_decomposition(g, Matching(frozenset({(1, 2)})))


def test_matching_bounds_equality_fixtures():
    rng = random.Random(5)
    from gainspectra.theorems import _random_switch
    g = disjoint_union(path_graph(2), path_graph(2), path_graph(1))
    res = by_name(check_matching_bounds(_random_switch(random_gains(g, 1), rng)))
    assert res["matching_energy_bound"].equality
    assert "single edges" in res["matching_energy_bound"].classifier_verdict
    g = disjoint_union(path_graph(3), path_graph(3), path_graph(1))
    res = by_name(check_matching_bounds(_random_switch(random_gains(g, 2), rng)))
    assert res["matching_energy_bound"].equality
    assert "two-edge paths" in res["matching_energy_bound"].classifier_verdict


def test_matching_bounds_hold_on_random():
    rng = random.Random(6)
    for s in range(60):
        g = random_graph(rng, rng.randrange(2, 12), rng.choice([0.3, 0.6]))
        if g.m == 0:
            continue
        for r in check_matching_bounds(random_gains(g, s)):
            assert r.holds


def test_book_strictly_below_double_star():
    rng = random.Random(7)
    for s in range(30):
        p, q = rng.randrange(0, 4), rng.randrange(0, 4)
        res = by_name(check_matching_bounds(random_gains(book(p, q, 1), s)))
        r = res["one_triangle_book_below_double_star"]
        assert r.holds and r.slack > 1e-6


def test_two_triangle_book_can_reach_double_star_energy():
    # with two triangles over the base the strict gap of the one-triangle
    # case closes: a single -1 gain on any triangle edge ties the balanced
    # double star with the same maximum edge degree, while -1 on the base
    # or a pendant edge stays strictly below
    g = book(1, 1, 2)
    target = energy(GainGraph.all_ones(double_star(3, 3))).energy
    base = (0, 1)
    ties, below = [], []
    for e in g.edge_list:
        phi = GainGraph.from_gains(g, {f: (-1.0 if f == e else 1.0) for f in g.edge_list})
        gap = target - energy(phi).energy
        (ties if abs(gap) <= 1e-9 else below).append(e)
        if gap > 1e-9:
            assert e == base or g.degree(e[0]) == 1 or g.degree(e[1]) == 1
    triangle_edges = {e for e in g.edge_list
                      if e != base and g.degree(e[0]) > 1 and g.degree(e[1]) > 1}
    assert set(ties) == triangle_edges and len(ties) == 4


def test_double_star_cap_equality_iff_balanced_shape():
    for p, q in [(0, 0), (1, 1), (2, 3), (1, 4), (0, 5)]:
        res = by_name(check_matching_bounds(random_gains(double_star(p, q), p + 10 * q)))
        r = res["double_star_energy_cap"]
        assert r.holds
        assert r.equality == (abs(p - q) <= 1)


def test_whole_graph_shape_detector():
    assert whole_graph_star_book_shape(book(2, 3, 1)) == (2, 3, 1)
    assert whole_graph_star_book_shape(double_star(2, 2)) == (2, 2, 0)
    assert whole_graph_star_book_shape(cycle_graph(5)) is None
    assert whole_graph_star_book_shape(complete_graph(3)) == (0, 0, 1)


def test_unicyclic_direction_by_girth():
    for r in range(3, 9):
        res = by_name(check_unicyclic(cycle_graph(r), samples=32))
        for x in res.values():
            assert x.holds
        if r % 4 == 0:
            assert "unicyclic_plain_gain_minimizes" in res
        else:
            assert "unicyclic_plain_gain_maximizes" in res
        eq = res["unicyclic_equality_points"]
        assert ("gain -1" in eq.classifier_verdict) == (r % 2 == 1)


def test_unicyclic_with_pendant_trees():
    rng = random.Random(8)
    for s in range(20):
        g = random_unicyclic(rng, rng.randrange(4, 12))
        for x in check_unicyclic(g, samples=16):
            assert x.holds


def test_unicyclic_rejects_other_graphs():
    with pytest.raises(Exception):
        check_unicyclic(path_graph(4))
    with pytest.raises(ValueError):
        sweep_unicyclic(cycle_graph(4), samples=5)


def _bridged(*cycles):
    g = disjoint_union(*[cycle_graph(r) for r in cycles])
    edges = set(g.edges)
    off = 0
    prev = None
    for r in cycles:
        if prev is not None:
            edges.add((prev, off))
        prev = off
        off += r
    return SimpleGraph.from_edges(g.n, edges)


def test_witness_on_single_cycles():
    for r in range(3, 7):
        phi1, phi2, w = nonequienergetic_witness(cycle_graph(r))
        assert w.holds and abs(energy(phi1).energy - energy(phi2).energy) > 1e-6


def test_witness_on_disjoint_cycle_fixtures():
    for cycles in [(3, 4), (4, 5), (3, 3), (5, 6), (3, 4, 5)]:
        g = _bridged(*cycles)
        phi1, phi2, w = nonequienergetic_witness(g)
        assert w.holds
        if len({r % 2 for r in cycles}) == 2:
            # mixed parity: the distinguished cycle must be even
            assert "length 4" in w.classifier_verdict or "length 6" in w.classifier_verdict


def test_witness_rejects_shared_cycles_and_forests():
    with pytest.raises(ValueError):
        nonequienergetic_witness(complete_graph(4))
    with pytest.raises(ValueError):
        nonequienergetic_witness(path_graph(4))


def test_straddle_search_regression():
    g = _bridged(3, 4)
    out = straddle_search(g, seed=0)
    assert out is not None
    lo, hi = out
    base = energy(GainGraph.all_ones(g)).energy
    assert energy(lo).energy < base - 1e-6 < base + 1e-6 < energy(hi).energy
    again = straddle_search(g, seed=0)
    assert again is not None and again[0] == lo and again[1] == hi


def test_corpus_deterministic():
    a = corpus("sec3", 5, 10)
    b = corpus("sec3", 5, 10)
    assert [i for i, _ in a] == [i for i, _ in b]
    assert all(x == y for (_, x), (_, y) in zip(a, b))
    with pytest.raises(ValueError):
        corpus("sec9", 0, 1)


def test_verify_suites_all_hold():
    for suite in ("sec3", "sec4", "sec5"):
        for ident, checks in verify_suite(suite, seed=0, count=15):
            for c in checks:
                assert c.holds, (ident, c)
