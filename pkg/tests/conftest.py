import random

import pytest

from p3iso.graphcore import Graph


@pytest.fixture
def rng():
    return random.Random(0x5CA1AB1E)


_ATLAS_BY_ORDER = None


def atlas_by_order() -> dict[int, list[Graph]]:
    """All graphs on 1..7 vertices (networkx Graph Atlas), as library graphs."""
    global _ATLAS_BY_ORDER
    if _ATLAS_BY_ORDER is None:
        import networkx as nx

        out: dict[int, list[Graph]] = {n: [] for n in range(1, 8)}
        for G in nx.graph_atlas_g():
            n = G.number_of_nodes()
            if n == 0:
                continue
            relabel = {v: i for i, v in enumerate(sorted(G.nodes()))}
            out[n].append(Graph.from_edges(
                n, [(relabel[u], relabel[v]) for u, v in G.edges()]))
        # guard against misreading the atlas: known class counts per order
        assert [len(out[n]) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
        _ATLAS_BY_ORDER = out
    return _ATLAS_BY_ORDER


def connected_subcubic_upto(max_n: int):
    from p3iso.enumeration import EnumSpec, iter_subcubic

    return list(iter_subcubic(EnumSpec(max_n)))
