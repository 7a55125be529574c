import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedconn import generators as gen
from mixedconn.errors import (
    DuplicateEdgeId,
    DuplicateVirtualLabel,
    LoopEdge,
    ParseError,
    UnknownEdge,
    UnknownEndpoint,
)
from mixedconn.graph import Edge, build, ear_of, ears, parse, serialize


def test_build_triangle():
    g = build([0, 1, 2], [(0, 1), (1, 2), (2, 0)])
    assert len(g.edges) == 3
    assert g.is_triangle()


def test_build_bond():
    g = build([0, 1], [(0, 1)] * 3)
    assert len(g.edges) == 3
    assert g.multiplicities() == {(0, 1): 3}
    assert not g.is_simple()


def test_build_rejects_loop():
    with pytest.raises(LoopEdge):
        build([0, 1], [(0, 0)])


def test_build_rejects_duplicate_label():
    with pytest.raises(DuplicateVirtualLabel):
        build([0, 1, 2], [(0, 1, 5), (1, 2, 5)])


def test_build_rejects_unknown_endpoint():
    with pytest.raises(UnknownEndpoint):
        build([0, 1], [(0, 2)])


def test_build_rejects_duplicate_id():
    with pytest.raises(DuplicateEdgeId):
        build([0, 1], [Edge(0, 0, 1), Edge(0, 0, 1)])


def test_build_infers_vertices():
    g = build(edges=[(3, 4), (4, 5)])
    assert g.vertices == {3, 4, 5}


def test_add_edge_gets_next_id():
    g = gen.cycle(4)
    h, eid = g.add_edge(0, 2, label=7)
    assert eid == 4
    assert h.edge(4).label == 7
    assert h.virtual_edges == (Edge(4, 0, 2, 7),)


def test_unknown_edge():
    with pytest.raises(UnknownEdge):
        gen.cycle(3).edge(10)


def test_ear_of_cycle_is_closed():
    g = gen.cycle(4)
    for e in g.edge_ids():
        ear = ear_of(g, e)
        assert ear.closed and not ear.trivial
        assert sorted(ear.edge_ids) == [0, 1, 2, 3]
        assert ear.edge_ids[0] == 0


def test_ear_of_k4_is_trivial():
    g = gen.complete(4)
    for e in g.edge_ids():
        assert ear_of(g, e).edge_ids == (e,)
        assert ear_of(g, e).trivial


def test_ear_of_two_triangles_sharing_an_edge():
    # u=0, v=1 share the edge 01; w=2 and 3 are the apexes
    g = build([0, 1, 2, 3], [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    assert ear_of(g, 0).trivial
    ear = ear_of(g, 1)
    assert ear.edge_ids == (1, 2) and not ear.trivial and not ear.closed


def test_ears_of_c5():
    (ear,) = ears(gen.cycle(5))
    assert ear.closed and len(ear.edge_ids) == 5


def test_ears_of_k4():
    es = ears(gen.complete(4))
    assert len(es) == 6 and all(e.trivial for e in es)


def test_ears_of_subdivided_k4():
    k4 = gen.complete(4)
    e0 = k4.edge(0)
    g = k4.remove_edges([0]).add_vertex(4)
    g, _ = g.add_edge(e0.u, 4)
    g, _ = g.add_edge(4, e0.v)
    es = ears(g)
    assert sum(e.trivial for e in es) == 5
    assert [len(e.edge_ids) for e in es if not e.trivial] == [2]


def test_parse_triangle():
    assert parse("e 0 1\ne 1 2\ne 2 0\n").is_triangle()


def test_parse_loop_is_parse_error():
    with pytest.raises(ParseError) as info:
        parse("e 0 0\n")
    assert isinstance(info.value.__cause__, LoopEdge)


def test_parse_virtual_edge():
    g = parse("e 0 1\ne 0 1 v3\n")
    assert len(g.edges) == 2
    assert [e.label for e in g.edges] == [None, 3]


def test_parse_comments_and_isolated_vertices():
    g = parse("# header\n\nv 7\ne 0 1  # trailing\n")
    assert g.vertices == {0, 1, 7}


@pytest.mark.parametrize("text", ["x 1\n", "e 0\n", "e 0 1 w2\n", "e a b\n", "e 0 1 v1\ne 1 2 v1\n"])
def test_parse_errors_carry_line_numbers(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.lineno >= 1


edge_lists = st.lists(
    st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda t: t[0] != t[1]),
    min_size=1,
    max_size=15,
)


@given(edge_lists, st.sets(st.integers(0, 14)))
def test_serialize_round_trip(edges, virtual):
    g = build(edges=[(u, v, i) if i in virtual else (u, v) for i, (u, v) in enumerate(edges)])
    h = parse(serialize(g))
    assert h == g.renumber_edges()


@given(edge_lists)
@settings(max_examples=200)
def test_ears_partition_edges(edges):
    g = build(edges=edges)
    es = ears(g)
    ids = [i for ear in es for i in ear.edge_ids]
    assert sorted(ids) == sorted(g.edge_ids())
    for ear in es:
        for i in ear.edge_ids:
            assert ear_of(g, i) == ear
        if ear.trivial:
            assert len(ear.edge_ids) == 1
