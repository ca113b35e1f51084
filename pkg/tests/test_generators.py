import pytest

from p3iso import generators as gen
from p3iso.generators import (BadOrder, CatalogSelfCheckFailed,
                              ConstructionParams)
from p3iso.graphcore import Graph, VertexSet, delete_vertices, is_connected
from p3iso.patterns import catalog_match, has_induced_cycle, is_isomorphic
from p3iso.solver import is_isolating, isolation_number
from p3iso.patterns import P3


def test_standard_graphs():
    p3 = gen.path(3)
    assert p3.edge_count == 2 and p3.max_degree() == 2
    c6 = gen.cycle(6)
    assert all(c6.degree(v) == 2 for v in range(6))
    assert is_isomorphic(gen.complete(3), gen.cycle(3))
    with pytest.raises(BadOrder):
        gen.path(0)
    with pytest.raises(BadOrder):
        gen.cycle(2)
    with pytest.raises(BadOrder):
        gen.complete(0)


def test_construction_params():
    for n in range(4, 41):
        p = ConstructionParams.for_order(n, 3)
        assert p.a == n // 4 and p.b == n - 3 * p.a
        assert p.a <= p.b <= p.a + p.k
    with pytest.raises(BadOrder):
        ConstructionParams.for_order(3, 3)


def test_construction_b_examples():
    assert gen.construction_B(3, gen.path(3)) == gen.path(3)

    b4 = gen.construction_B_p3(4)
    # a single spine vertex joined to every vertex of one 3-path
    assert b4.n == 4 and b4.degree(0) == 3
    assert isolation_number(b4).value == 1

    b8 = gen.construction_B_p3(8)
    assert b8.n == 8
    assert isolation_number(b8).value == 2


def test_construction_b_order_and_spine():
    for n in range(1, 41):
        b = gen.construction_B_p3(n)
        assert b.n == n
        if n >= 4:
            a = n // 4
            assert is_isolating(b, P3, VertexSet.of(n, range(a)))


def test_construction_b_general_attachment():
    b = gen.construction_B(10, gen.complete(3))
    assert b.n == 10
    b = gen.construction_B(9, gen.cycle(4))
    assert b.n == 9
    with pytest.raises(ValueError):
        gen.construction_B(5, Graph.empty(2))


def test_catalog_entries():
    cat = gen.catalog()
    assert len(cat) == 12
    assert [e.order for e in cat] == [3, 3, 7, 7, 7, 7, 7, 7, 7, 11, 11, 15]
    assert [e.iota for e in cat] == [1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 4]

    g11 = gen.catalog_entry("G11")
    assert g11.order == 11 and g11.graph.edge_count == 14
    assert g11.graph.min_degree() == 2

    assert gen.catalog_entry("G15").iota == 4

    g71 = gen.catalog_entry("G71").graph
    sub, _ = delete_vertices(g71, [6])
    assert not is_connected(sub)

    with pytest.raises(KeyError):
        gen.catalog_entry("G99")


def test_catalog_documented_flags():
    for e in gen.catalog():
        assert e.induced_c6_free
        assert has_induced_cycle(e.graph, 6) is None
        assert e.max_degree == e.graph.max_degree() <= 3
        assert is_connected(e.graph)


def test_catalog_self_check_catches_transcription_errors():
    # a tampered copy of the catalog loader must refuse to load
    import p3iso.generators as g

    bad = dict(g._CATALOG_EDGES)
    bad["C7"] = (7, tuple((i, i + 1) for i in range(1, 7)))  # path, not cycle
    original = g._CATALOG_EDGES
    g._CATALOG_EDGES = bad
    g.catalog_graphs_raw.cache_clear()
    g.catalog.cache_clear()
    try:
        with pytest.raises(CatalogSelfCheckFailed):
            g.catalog()
    finally:
        g._CATALOG_EDGES = original
        g.catalog_graphs_raw.cache_clear()
        g.catalog.cache_clear()
        from p3iso.patterns import _catalog_fingerprints
        _catalog_fingerprints.cache_clear()


def test_disjoint_union_and_pendant():
    u = gen.disjoint_union(gen.cycle(3), gen.path(2))
    assert u.n == 5 and u.edge_count == 4
    p = gen.attach_pendant(gen.cycle(3), gen.path(2), 0, 0)
    assert p.edge_count == 5 and is_connected(p)


def test_random_eligible_graphs_are_eligible(rng):
    for _ in range(40):
        n = rng.randint(4, 40)
        g = gen.random_eligible_graph(n, rng)
        assert g.n == n
        assert is_connected(g)
        assert g.max_degree() <= 3
        assert has_induced_cycle(g, 6) is None
        assert catalog_match(g) is None


def test_random_subcubic_connected(rng):
    for _ in range(40):
        g = gen.random_subcubic_connected(rng.randint(1, 30), rng)
        assert is_connected(g) and g.max_degree() <= 3
