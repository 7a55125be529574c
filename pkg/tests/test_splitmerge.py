import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedconn import generators as gen
from mixedconn import oracle
from mixedconn.components import (
    ComponentKind,
    ComponentSet,
    component_tree,
    from_dict,
    merge_all,
    to_dict,
    to_json,
)
from mixedconn.equivalence import are_equivalent, graphs_isomorphic
from mixedconn.errors import (
    EndpointMismatch,
    InvalidClassSelection,
    LabelNotShared,
    NotASeparationPair,
    NotBiconnected,
    NotSupporting,
    PairingBroken,
)
from mixedconn.graph import Edge, build
from mixedconn.oracle import VertexEdgeSeparator
from mixedconn.splitmerge import (
    direct_split_sequence,
    merge,
    replay_final,
    split,
    split_25,
    split_components,
    triconnected_components,
)

CYCLE, BOND, RIGID = ComponentKind.CYCLE, ComponentKind.BOND, ComponentKind.RIGID


def _kinds(cs):
    return sorted(k.value for k in cs.kinds())


def test_split_c4_into_triangles():
    g1, g2, lab = split(gen.cycle(4), (0, 2), [0])
    for h in (g1, g2):
        assert h.is_triangle()
        assert h.edge_with_label(lab).ends() == (0, 2)
    assert {e.id for e in g1.edges if e.label is None} == {0, 1}


def test_split_two_k4(two_k4):
    classes = oracle.separation_classes(two_k4, 0, 1)
    idx = next(i for i, c in enumerate(classes) if len(c) == 5 and 2 not in c)
    g1, g2, lab = split(two_k4, (0, 1), [idx])
    assert graphs_isomorphic(g1, gen.complete(4))
    assert len(g2.edges) == 7 and g2.multiplicities()[(0, 1)] == 2


def test_split_4_bond():
    g1, g2, _ = split(gen.bond(4), (0, 1), [0, 1])
    assert len(g1.edges) == len(g2.edges) == 3


def test_split_errors():
    with pytest.raises(NotASeparationPair):
        split(gen.complete(4), (0, 1), [0])
    with pytest.raises(InvalidClassSelection):
        split(gen.cycle(4), (0, 2), [5])


def test_merge_inverts_split():
    c4 = gen.cycle(4)
    g1, g2, lab = split(c4, (0, 2), [0])
    assert merge(g1, g2, lab) == c4


def test_merge_two_triangles():
    t1 = build(edges=[(0, 1), (1, 2), (0, 2, 9)])
    t2 = build(edges=[Edge(5, 0, 3), Edge(6, 3, 2), Edge(7, 0, 2, 9)])
    m = merge(t1, t2, 9)
    assert graphs_isomorphic(m, gen.cycle(4)) and not m.virtual_edges


def test_merge_errors():
    t1 = build(edges=[(0, 1), (1, 2), (0, 2, 9)])
    t2 = build(edges=[(0, 1), (1, 2), (0, 2, 8)])
    with pytest.raises(LabelNotShared):
        merge(t1, t2, 9)
    t3 = build(edges=[(0, 1), (1, 2), (0, 1, 9)])
    with pytest.raises(EndpointMismatch):
        merge(t1, t3, 9)


def test_split_25_c4():
    # a-b-c-d = 0-1-2-3, separator (c, ab) = (2, edge 0), support {a, c}
    g1, g2 = split_25(gen.cycle(4), VertexEdgeSeparator(2, 0), (0, 2))
    assert g1.is_triangle() and g2.is_triangle()
    assert {e.id for e in g1.edges if e.label is None} == {2, 3}
    assert {e.id for e in g2.edges if e.label is None} == {0, 1}
    assert g1.virtual_edges[0].label == g2.virtual_edges[0].label


def test_split_25_c6_both_supports():
    c6 = gen.cycle(6)
    s = VertexEdgeSeparator(0, 2)
    sizes = []
    for sup in oracle.supports_of(c6, s):
        g1, g2 = split_25(c6, s, sup)
        assert s.e in g2.edge_ids()
        sizes.append((len(g1.edges), len(g2.edges)))
    assert sizes == [(3, 5), (4, 4)]


def test_split_25_not_supporting():
    with pytest.raises(NotSupporting):
        split_25(gen.cycle(4), VertexEdgeSeparator(2, 0), (1, 2))


def test_split_components_examples():
    cs = split_components(gen.cycle(4))
    assert len(cs) == 2 and all(c.graph.is_triangle() for c in cs)
    assert len(split_components(gen.complete(4))) == 1
    cs = split_components(gen.bond(4))
    assert [len(c.graph.edges) for c in cs] == [3, 3]


@pytest.mark.parametrize("engine", ["linear", "split"])
def test_triconnected_components_examples(engine, two_k4):
    for n in range(3, 8):
        (c,) = triconnected_components(gen.cycle(n), engine=engine).components
        assert c.kind is CYCLE and not c.graph.virtual_edges
    k23 = triconnected_components(gen.complete_bipartite(2, 3), engine=engine)
    assert _kinds(k23) == ["bond", "cycle", "cycle", "cycle"]
    bond = next(c for c in k23 if c.kind is BOND)
    assert len(bond.graph.virtual_edges) == 3
    tk = triconnected_components(two_k4, engine=engine)
    assert _kinds(tk) == ["bond", "rigid", "rigid"]
    bond = next(c for c in tk if c.kind is BOND)
    assert len(bond.graph.edges) == 3 and len(bond.graph.virtual_edges) == 2


def test_triconnected_components_not_biconnected():
    with pytest.raises(NotBiconnected):
        triconnected_components(build(edges=[(0, 1), (1, 2)]))


def test_small_hosts_are_single_components():
    for k in (1, 2, 3, 5):
        (c,) = triconnected_components(gen.bond(k)).components
        assert c.kind is BOND


def test_component_tree_examples(two_k4):
    assert component_tree(triconnected_components(gen.cycle(5))).edges == ()
    k23 = triconnected_components(gen.complete_bipartite(2, 3))
    tree = component_tree(k23)
    center = next(i for i, c in enumerate(k23) if c.kind is BOND)
    assert sorted(len(tree.neighbors(i)) for i in range(4)) == [1, 1, 1, 3]
    assert len(tree.neighbors(center)) == 3
    tk = triconnected_components(two_k4)
    degrees = sorted(len(component_tree(tk).neighbors(i)) for i in range(3))
    assert degrees == [1, 1, 2]


def test_merge_all_examples():
    for g in (gen.cycle(4), gen.complete_bipartite(2, 3)):
        assert merge_all(triconnected_components(g)) == g
    dangling = ComponentSet.of([build(edges=[(0, 1), (1, 2), (0, 2, 4)])])
    with pytest.raises(PairingBroken):
        merge_all(dangling)


def test_canonical_order_is_stable():
    cs = triconnected_components(gen.complete_bipartite(2, 3))
    assert [c.kind for c in cs] == [CYCLE, CYCLE, CYCLE, BOND]


def test_json_round_trip(two_k4):
    cs = triconnected_components(two_k4)
    data = to_dict(cs)
    assert set(data) == {"components", "tree"}
    assert set(data["components"][0]) == {"id", "kind", "vertices", "edges"}
    assert set(data["components"][0]["edges"][0]) == {"u", "v", "virtual_label", "color"}
    back = from_dict(data)
    assert are_equivalent(cs, back)
    assert to_json(cs).startswith('{"components": [')


def test_c4_splits_at_either_pair_are_equivalent():
    c4 = gen.cycle(4)
    a = ComponentSet.of(split(c4, (0, 2), [0])[:2])
    b = ComponentSet.of(split(c4, (1, 3), [0])[:2])
    assert are_equivalent(a, b)
    assert are_equivalent(a, a) and are_equivalent(b, a)
    tri = ComponentSet.of([gen.cycle(3)])
    assert are_equivalent(tri, ComponentSet.of([gen.cycle(3)]))
    assert not are_equivalent(ComponentSet.of([gen.cycle(3), gen.cycle(3)]), ComponentSet.of([gen.cycle(3), gen.bond(3)]))


def test_reconstruction_and_uniqueness(corpus):
    for g in corpus[:200]:
        lin = triconnected_components(g)
        assert merge_all(lin) == g
        for seed in (None, 3):
            assert are_equivalent(lin, triconnected_components(g, engine="split", policy=seed), strict=True)


def test_component_kinds(corpus):
    for g in corpus:
        cs = triconnected_components(g)
        if len(cs) == 1:
            continue
        for c in cs:
            h = c.graph
            if c.kind is CYCLE:
                assert all(h.degree(x) == 2 for x in h.vertices) and len(h.edges) == len(h.vertices)
            elif c.kind is BOND:
                assert len(h.vertices) == 2 and len(h.edges) >= 3
            else:
                assert oracle.is_triconnected_bruteforce(h)
        for i, j, _ in component_tree(cs).edges:
            ki, kj = cs[i].kind, cs[j].kind
            assert not (ki is kj and ki is not RIGID)


def test_direct_split_sequences_replay(corpus):
    for g in corpus[:150]:
        tri = triconnected_components(g)
        for seed in (None, 1):
            steps = direct_split_sequence(tri, seed)
            assert len(steps) == len(tri) - 1
            final = replay_final(g, steps)
            assert are_equivalent(ComponentSet.of(final), tri, strict=True)


@given(st.integers(3, 9), st.integers(0, 8), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_engines_agree_on_random_graphs(n, extra, seed):
    g = gen.random_biconnected(n, n + extra, seed)
    lin = triconnected_components(g)
    spl = triconnected_components(g, engine="split", policy=seed)
    assert are_equivalent(lin, spl, strict=True)
    assert merge_all(lin) == g

