import random

import pytest

from p3iso import generators as gen
from p3iso.graphcore import Graph, delete_closed_neighborhood
from p3iso.patterns import (ANY_CYCLE, K1, K2, K3, P3, IsolationFamily,
                            catalog_match, contains_copy, count_induced_cycles,
                            cycle_family, family_from_name, find_isomorphism,
                            has_induced_cycle, is_isomorphic)

from conftest import connected_subcubic_upto
from oracles import brute_has_induced_cycle, brute_is_isomorphic


def shuffled_copy(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_family_validation_and_parsing():
    with pytest.raises(ValueError):
        IsolationFamily("cycle", k=2)
    with pytest.raises(ValueError):
        IsolationFamily("nope")
    with pytest.raises(ValueError):
        IsolationFamily("list", members=(Graph.empty(2),))  # disconnected
    assert family_from_name("cycle:5") == cycle_family(5)
    assert family_from_name("p3") is P3


def test_contains_copy_p3_examples():
    assert contains_copy(gen.path(2), P3) is None
    wit = contains_copy(gen.cycle(5), P3)
    assert wit is not None
    a, c, b = wit.mapping
    assert gen.cycle(5).has_edge(a, c) and gen.cycle(5).has_edge(c, b)

    # C6 minus a closed neighborhood still holds a 3-path: one vertex cannot
    # isolate a 6-cycle
    sub, _ = delete_closed_neighborhood(gen.cycle(6), [0])
    assert contains_copy(sub, P3) is not None


def test_contains_copy_other_families():
    assert contains_copy(gen.path(2), K2) is not None
    assert contains_copy(Graph.empty(4), K2) is None
    assert contains_copy(Graph.empty(1), K1) is not None
    assert contains_copy(Graph.empty(0), K1) is None
    assert contains_copy(gen.complete(4), K3) is not None
    assert contains_copy(gen.cycle(5), K3) is None
    assert contains_copy(gen.cycle(5), ANY_CYCLE) is not None
    assert contains_copy(gen.path(9), ANY_CYCLE) is None
    assert contains_copy(gen.complete(4), cycle_family(4)) is not None
    assert contains_copy(gen.cycle(5), cycle_family(4)) is None
    listfam = IsolationFamily("list", members=(gen.path(4),))
    assert contains_copy(gen.cycle(6), listfam) is not None
    assert contains_copy(gen.complete(3), listfam) is None


def test_contains_copy_p3_iff_max_degree_2():
    for g in connected_subcubic_upto(7):
        assert (contains_copy(g, P3) is not None) == (g.max_degree() >= 2)


def test_induced_cycle_examples():
    wit = has_induced_cycle(gen.cycle(6), 6)
    assert wit is not None and len(set(wit.mapping)) == 6
    assert has_induced_cycle(gen.catalog_entry("G15").graph, 6) is None
    assert has_induced_cycle(gen.complete(4), 4) is None  # every C4 is chorded
    assert has_induced_cycle(gen.cycle(7), 6) is None


def test_induced_cycle_witness_is_an_induced_cycle():
    g = gen.catalog_entry("G11").graph
    for k in (3, 4, 5):
        wit = has_induced_cycle(g, k)
        if wit is None:
            continue
        cyc = wit.mapping
        for i, u in enumerate(cyc):
            for j in range(i + 1, len(cyc)):
                expected = (j - i == 1) or (i == 0 and j == k - 1)
                assert g.has_edge(u, cyc[j]) == expected


def test_induced_cycle_agrees_with_subset_scan():
    for g in connected_subcubic_upto(7):
        for k in range(3, g.n + 1):
            assert (has_induced_cycle(g, k) is not None) == \
                brute_has_induced_cycle(g, k), (g, k)


def test_induced_cycle_agrees_on_random_general_graphs(rng):
    for _ in range(150):
        n = rng.randint(4, 9)
        g = gen.random_general_graph(n, rng.uniform(0.2, 0.7), rng)
        for k in (4, 5, 6):
            assert (has_induced_cycle(g, k) is not None) == \
                brute_has_induced_cycle(g, k)


def test_induced_cycle_count_no_double_counting():
    assert count_induced_cycles(gen.cycle(6), 6) == 1
    assert count_induced_cycles(gen.complete(4), 3) == 4
    assert count_induced_cycles(gen.cycle(9), 9) == 1


def test_is_isomorphic_examples(rng):
    c7 = gen.cycle(7)
    for _ in range(10):
        assert is_isomorphic(c7, shuffled_copy(c7, rng)) is not None

    g74 = gen.catalog_entry("G74").graph
    g76 = gen.catalog_entry("G76").graph
    # oracle first: the two 10-edge graphs really are non-isomorphic
    assert not brute_is_isomorphic(g74, g76)
    assert is_isomorphic(g74, g76) is None

    assert is_isomorphic(gen.path(3), gen.complete(3)) is None


def test_is_isomorphic_matches_brute_on_small_pairs(rng):
    graphs = [g for g in connected_subcubic_upto(6) if g.n >= 4]
    for _ in range(150):
        g = rng.choice(graphs)
        h = rng.choice(graphs)
        assert (is_isomorphic(g, h) is not None) == brute_is_isomorphic(g, h)


def test_is_isomorphic_is_an_equivalence(rng):
    pool = [gen.random_subcubic_connected(rng.randint(3, 10), rng) for _ in range(40)]
    for g in pool:
        wit = is_isomorphic(g, g)
        assert wit is not None
    for _ in range(200):
        g, h = rng.choice(pool), rng.choice(pool)
        wg = is_isomorphic(g, h)
        wh = is_isomorphic(h, g)
        assert (wg is None) == (wh is None)
        if wg is not None:
            # witness maps h into g preserving both edges and non-edges
            m = wg.mapping
            for u in range(h.n):
                for v in range(u + 1, h.n):
                    assert h.has_edge(u, v) == g.has_edge(m[u], m[v])
    for _ in range(200):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        if is_isomorphic(a, b) and is_isomorphic(b, c):
            assert is_isomorphic(a, c) is not None


def test_find_isomorphism_with_pin():
    g15 = gen.catalog_entry("G15").graph
    # the two triangle degree-2 vertices (labels 1 and 9) are swappable
    wit = find_isomorphism(g15, g15, fixed={0: 8})
    assert wit is not None and wit.mapping[0] == 8
    # but label 5 is not in their orbit
    assert find_isomorphism(g15, g15, fixed={0: 4}) is None


def test_catalog_match_examples():
    assert catalog_match(gen.cycle(11)) == "C11"
    assert catalog_match(gen.construction_B_p3(8)) is None
    assert catalog_match(gen.cycle(15)) is None
    assert catalog_match(gen.cycle(7)) == "C7"
    assert catalog_match(gen.path(3)) == "P3"
    assert catalog_match(gen.complete(3)) == "C3"


def test_catalog_match_shuffled(rng):
    for e in gen.catalog():
        for _ in range(3):
            assert catalog_match(shuffled_copy(e.graph, rng)) == e.id


def test_catalog_match_exact_over_small_eligible_graphs():
    found = {}
    for g in connected_subcubic_upto(7):
        if has_induced_cycle(g, 6) is not None:
            continue
        cid = catalog_match(g)
        if cid:
            found[cid] = found.get(cid, 0) + 1
    assert found == {cid: 1 for cid in
                     ("P3", "C3", "C7", "G71", "G72", "G73", "G74", "G75", "G76")}
