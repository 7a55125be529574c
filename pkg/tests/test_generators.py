import networkx as nx
import pytest

from mixedconn import connectivity
from mixedconn import generators as gen
from mixedconn.cycles import is_eulerian
from mixedconn.errors import GraphError
from mixedconn.oracle import biconnected_blocks


def _nx(g):
    return nx.MultiGraph([e.ends() for e in g.edges])


def test_families_have_expected_sizes():
    assert len(gen.cycle(7).edges) == 7
    assert len(gen.bond(4).edges) == 4 and gen.bond(4).vertices == {0, 1}
    assert len(gen.complete(5).edges) == 10
    assert len(gen.complete_bipartite(3, 4).edges) == 12
    assert len(gen.prism(8).edges) == 12
    assert len(gen.wheel(6).edges) == 10


def test_family_errors():
    with pytest.raises(GraphError):
        gen.prism(5)
    with pytest.raises(GraphError):
        gen.glue(gen.cycle(3), gen.cycle(3), "weld")
    with pytest.raises(GraphError):
        gen.k4chain(2, "face")


def test_glue_modes():
    k4 = gen.complete(4)
    assert len(gen.glue(k4, k4, "share-edge").edges) == 11
    assert len(gen.glue(k4, k4, "share-pair-no-edge").edges) == 10
    attach = gen.glue(k4, k4, "2.5-attach")
    assert len(attach.edges) == 11 and len(attach.vertices) == 7


def test_k4chain_shapes():
    e = gen.k4chain(10, "edge")
    assert len(e.edges) == 51 and len(biconnected_blocks(e)) == 1
    v = gen.k4chain(10, "vertex")
    assert len(v.edges) == 60 and len(biconnected_blocks(v)) == 10


def test_random_biconnected_is_seeded():
    a = gen.random_biconnected(8, 12, seed=3)
    assert a == gen.random_biconnected(8, 12, seed=3)
    assert len(a.vertices) == 8 and len(a.edges) == 12
    assert connectivity.is_biconnected(a)


def test_corpora(random_graphs, eulerian_graphs):
    for g in random_graphs:
        assert connectivity.is_biconnected(g)
        assert len(g.vertices) <= 8 and len(g.edges) <= 14
    for g in eulerian_graphs:
        assert connectivity.is_biconnected(g) and is_eulerian(g)


def test_atlas_counts(atlas_graphs):
    # biconnected simple graphs on 2..6 vertices: 1, 1, 3, 10, 56
    sizes = [len(g.vertices) for g in atlas_graphs]
    assert [sizes.count(n) for n in range(2, 7)] == [1, 1, 3, 10, 56]


def test_cubic_3connected_counts():
    graphs = gen.cubic_3connected(8)
    assert [len(g.vertices) for g in graphs] == [4, 6, 6, 8, 8, 8, 8]
    for g in graphs:
        assert nx.node_connectivity(nx.Graph(_nx(g))) == 3


def test_worked_example_graphs():
    fig = gen.degenerate_example()
    assert len(fig.vertices) == 8 and len(fig.edges) == 13
    mid = gen.middle_example()
    assert len(mid.vertices) == 7 and len(mid.edges) == 11
