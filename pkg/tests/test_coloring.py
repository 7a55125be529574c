import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedconn import generators as gen
from mixedconn import oracle
from mixedconn.coloring import (
    Color,
    color_virtual_edges,
    components_25,
    is_25_connected,
    is_triconnected,
    reconcile,
    simulate_coloring,
    tree_is_minor,
)
from mixedconn.components import ComponentSet, merge_all
from mixedconn.equivalence import are_equivalent
from mixedconn.errors import NotBiconnected, NotTriconnectedComponents
from mixedconn.graph import build
from mixedconn.splitmerge import direct_split_sequence, triconnected_components

RED, GREEN = Color.RED, Color.GREEN


def _k4_triangle():
    """Three K_4 minus an edge, hung on the sides of a triangle that is not present."""
    edges, nxt = [], 3
    for a, b in [(0, 1), (1, 2), (2, 0)]:
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(a, x), (a, y), (b, x), (b, y), (x, y)]
    return build(edges=edges)


def test_two_k4_is_one_component(two_k4):
    r = components_25(two_k4)
    assert set(r.full_coloring.values()) == {RED}
    (c,) = r.components.components
    assert c.graph == two_k4 and r.coloring == {}


def test_k23_keeps_all_labels_green():
    r = components_25(gen.complete_bipartite(2, 3))
    assert set(r.full_coloring.values()) == {GREEN}
    assert len(r.components) == 4


def test_all_virtual_cycle_rule():
    g = _k4_triangle()
    r = components_25(g)
    kinds = sorted(c.kind.value for c in r.tricomps)
    assert kinds == ["cycle", "rigid", "rigid", "rigid"]
    assert set(r.full_coloring.values()) == {RED}
    assert len(r.components) == 1 and is_25_connected(g)


def test_attached_k4_gives_cycle_with_real_edge():
    g = gen.glue(gen.complete(4), gen.complete(4), "2.5-attach")
    r = components_25(g)
    assert set(r.full_coloring.values()) == {GREEN}
    assert not is_25_connected(g)
    assert are_equivalent(r.components, oracle.split_components_25_oracle(g))


def test_single_component_hosts():
    for g in (gen.cycle(3), gen.cycle(6), gen.complete(4), gen.wheel(5), gen.prism(6)):
        r = components_25(g)
        assert len(r.components) == 1 and r.full_coloring == {}


def test_predicates():
    assert is_25_connected(gen.cycle(3)) and is_triconnected(gen.cycle(3))
    assert not is_25_connected(gen.cycle(4)) and not is_triconnected(gen.cycle(4))
    assert is_triconnected(gen.complete(4))
    k4chain = gen.k4chain(3, "edge")
    assert is_25_connected(k4chain) and not is_triconnected(k4chain)
    assert not is_triconnected(build(edges=[(0, 1), (1, 2)]))
    with pytest.raises(NotBiconnected):
        is_25_connected(build(edges=[(0, 1), (1, 2)]))


def test_components_25_requires_biconnected():
    with pytest.raises(NotBiconnected):
        components_25(build(edges=[(0, 1), (1, 2), (2, 0), (2, 3)]))


def test_coloring_rejects_non_components():
    # two cycles sharing a label should have been merged
    t1 = build(edges=[(0, 1), (1, 2), (2, 0, 0)])
    t2 = build(edges=[(0, 3), (3, 2), (2, 0, 0)])
    bad = ComponentSet.of([t1, t2])
    with pytest.raises(NotTriconnectedComponents):
        color_virtual_edges(bad)


def test_residual_tree_is_minor(corpus):
    for g in corpus:
        r = components_25(g)
        assert tree_is_minor(r.tree, r.tri_tree, r.full_coloring)
        assert tree_is_minor(r.tree, r.tri_tree, r.coloring)
        assert merge_all(r.components) == g


def test_structural_matches_oracle(corpus):
    for g in corpus:
        r = components_25(g)
        assert are_equivalent(r.components, oracle.split_components_25_oracle(g))
        assert is_25_connected(g) == oracle.is_25_connected_bruteforce(g)
        assert is_triconnected(g) == oracle.is_triconnected_bruteforce(g)


def test_simulation_matches_structural_rule(corpus):
    for g in corpus[:250]:
        tri = triconnected_components(g)
        expected = color_virtual_edges(tri)
        for seed in (None, 5):
            steps = direct_split_sequence(tri, seed)
            assert simulate_coloring(g, steps, tri) == expected


def test_engines_reconcile(random_graphs):
    for g in random_graphs[:150]:
        a = components_25(g)
        b = components_25(g, engine="split", policy=11)
        assert are_equivalent(a.components, b.components, strict=True)
        assert reconcile(a.tricomps, a.full_coloring, b.tricomps, b.full_coloring)


@given(st.integers(4, 8), st.integers(0, 6), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_random_graphs_match_oracle(n, extra, seed):
    g = gen.random_biconnected(n, n + extra, seed)
    r = components_25(g)
    assert are_equivalent(r.components, oracle.split_components_25_oracle(g, seed))
    assert all(col is GREEN for col in r.coloring.values())
    assert set(r.coloring) == set(r.components.labels)
