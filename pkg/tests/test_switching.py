import random

import pytest

from signedspectra import SignedGraph, complete_signed
from signedspectra.cycles import cycle_sign
from signedspectra.families import extremal_graph, near_extremal_graph
from signedspectra.spectra import char_poly_exact
from signedspectra.switching import (
    forest_normal_form,
    is_balanced,
    switch,
    switching_equivalent,
    switching_isomorphic,
)

from conftest import (
    brute_switching_orbit_count,
    brute_switching_orbit_of,
    random_signed_graph,
    signing_bitmask,
)


def one_negative_triangle():
    return SignedGraph(3, {(0, 1): -1, (0, 2): 1, (1, 2): 1})


def test_switch_empty_set_is_identity():
    g = extremal_graph(6)
    assert switch(g, set()) == g


def test_switch_involution():
    rng = random.Random(11)
    for _ in range(100):
        g = random_signed_graph(rng, rng.randint(1, 9))
        U = {v for v in range(g.n) if rng.random() < 0.5}
        assert switch(switch(g, U), U) == g


def test_switch_single_vertex_on_triangle():
    g = one_negative_triangle()
    h = switch(g, {0})
    assert h.sign(0, 1) == 1 and h.sign(0, 2) == -1 and h.sign(1, 2) == 1
    assert cycle_sign(h, (0, 1, 2)) == -1  # cycle sign untouched


def test_switch_rejects_bad_vertices():
    with pytest.raises(ValueError):
        switch(one_negative_triangle(), {3})


def test_balance_verdicts():
    assert is_balanced(complete_signed(5, 1)).balanced
    res = is_balanced(one_negative_triangle())
    assert not res.balanced
    assert res.negative_cycle is not None
    assert set(res.negative_cycle.vertices) == {0, 1, 2}
    assert not is_balanced(complete_signed(4, -1)).balanced


def test_balance_bisigning_certificate():
    rng = random.Random(12)
    for _ in range(200):
        g = random_signed_graph(rng, rng.randint(1, 8))
        res = is_balanced(g)
        if res.balanced:
            s = res.bisigning
            for u, v, sgn in g.edges():
                assert s[u] * s[v] == sgn
        else:
            w = res.negative_cycle
            assert cycle_sign(g, w.vertices) == -1


def test_balanced_iff_switch_of_all_positive():
    rng = random.Random(13)
    for _ in range(200):
        base = random_signed_graph(rng, rng.randint(1, 7), neg_prob=0.0)
        U = {v for v in range(base.n) if rng.random() < 0.5}
        assert is_balanced(switch(base, U)).balanced
        g = random_signed_graph(rng, rng.randint(1, 7))
        allpos = SignedGraph(g.n, {e: 1 for e in g.edge_set()})
        assert is_balanced(g).balanced == switching_equivalent(g, allpos)


def test_normal_form_tree():
    tree = SignedGraph(4, {(0, 1): -1, (1, 2): 1, (1, 3): -1})
    nf = forest_normal_form(tree)
    assert nf.cotree_signs == ()
    assert all(nf.normalized.sign(u, v) == 1 for u, v in nf.forest)
    assert switching_equivalent(nf.normalized, tree)


def test_normal_form_balanced_graph_is_all_positive():
    rng = random.Random(14)
    for _ in range(100):
        base = random_signed_graph(rng, rng.randint(2, 7), neg_prob=0.0)
        U = {v for v in range(base.n) if rng.random() < 0.5}
        nf = forest_normal_form(switch(base, U))
        assert all(s == 1 for _, s in nf.cotree_signs)


def test_normal_form_extremal_has_one_negative_cotree_edge():
    for n in (5, 6, 8):
        nf = forest_normal_form(extremal_graph(n))
        assert sum(1 for _, s in nf.cotree_signs if s < 0) == 1


def test_normal_form_extremal5_matches_brute_orbit():
    # the normalized signing must lie in the switching orbit of the input
    g = extremal_graph(5)
    nf = forest_normal_form(g)
    orbit = brute_switching_orbit_of(g)
    assert signing_bitmask(nf.normalized) in orbit


def test_switching_equivalent_basic():
    rng = random.Random(15)
    g = random_signed_graph(rng, 6)
    U = {0, 2, 5}
    assert switching_equivalent(g, switch(g, U))
    assert not switching_equivalent(one_negative_triangle(), complete_signed(3, 1))
    with pytest.raises(ValueError):
        switching_equivalent(one_negative_triangle(), complete_signed(4, 1))


def test_switching_equivalent_matches_orbits_exhaustively():
    # every pair of signings of each underlying graph on up to 4 vertices
    rng = random.Random(16)
    for _ in range(40):
        n = rng.randint(2, 4)
        base = random_signed_graph(rng, n, edge_prob=0.7, neg_prob=0.0)
        edges = sorted(base.edge_set())
        m = len(edges)
        for sa in range(1 << m):
            ga = SignedGraph(n, {e: -1 if (sa >> i) & 1 else 1 for i, e in enumerate(edges)})
            orbit = brute_switching_orbit_of(ga)
            for sb in range(1 << m):
                gb = SignedGraph(n, {e: -1 if (sb >> i) & 1 else 1 for i, e in enumerate(edges)})
                assert switching_equivalent(ga, gb) == (sb in orbit)


def test_switching_equivalence_relation_properties():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(2, 6)
        base = random_signed_graph(rng, n)
        edges = sorted(base.edge_set())
        resign = lambda: SignedGraph(  # noqa: E731
            n, {e: rng.choice((-1, 1)) for e in edges}
        )
        a, b, c = resign(), resign(), resign()
        assert switching_equivalent(a, a)
        assert switching_equivalent(a, b) == switching_equivalent(b, a)
        if switching_equivalent(a, b) and switching_equivalent(b, c):
            assert switching_equivalent(a, c)


def test_spectrum_invariance_exact():
    rng = random.Random(18)
    for _ in range(50):
        g = random_signed_graph(rng, rng.randint(1, 7))
        U = {v for v in range(g.n) if rng.random() < 0.5}
        assert char_poly_exact(g) == char_poly_exact(switch(g, U))


def test_reachable_cotree_assignments_count():
    # for connected graphs the orbit count over all signings is 2^(m-n+1)
    rng = random.Random(19)
    checked = 0
    while checked < 25:
        g = random_signed_graph(rng, rng.randint(2, 5), edge_prob=0.8)
        if len(g.components()) != 1:
            continue
        checked += 1
        assert brute_switching_orbit_count(g) == 2 ** (g.m - g.n + 1)


def test_switching_isomorphic_relabels():
    rng = random.Random(20)
    g = extremal_graph(5)
    perm = list(range(5))
    rng.shuffle(perm)
    h = switch(g.relabel(perm), {1, 3})
    ok, witness = switching_isomorphic(h, g)
    assert ok
    assert switching_equivalent(h.relabel(witness), g)


def test_switching_isomorphic_negative_cases():
    g5 = extremal_graph(5)
    ok, _ = switching_isomorphic(g5, near_extremal_graph(5))
    assert not ok
    ok, _ = switching_isomorphic(g5, complete_signed(5, -1))
    assert not ok
    with pytest.raises(ValueError):
        switching_isomorphic(g5, extremal_graph(6))
