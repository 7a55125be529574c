import pytest

from mixedconn import generators as gen
from mixedconn import invariants as inv
from mixedconn.components import ComponentSet
from mixedconn.errors import InvariantBreach
from mixedconn.graph import build
from mixedconn.splitmerge import SplitStep, direct_split_sequence, split, triconnected_components


def test_separator_sides_on_cycles():
    # C_n: any edge with any vertex off it
    for n in range(4, 8):
        assert inv.check_separator_sides(gen.cycle(n)) == n * (n - 2)
    assert inv.check_separator_sides(gen.complete(4)) == 0


def test_degree2_split_is_flagged():
    c5 = gen.cycle(5)
    g1, g2, lab = split(c5, (0, 2), [0])
    with pytest.raises(InvariantBreach):
        inv.check_no_degree2_pairs([SplitStep(c5, (0, 2), g1, g2, lab)])


def test_component_ears_flag_two_cycles():
    t1 = build(edges=[(0, 1), (1, 2), (2, 0, 0)])
    t2 = build(edges=[(0, 3), (3, 4), (4, 2), (2, 0, 0)])
    from mixedconn.components import Component, ComponentKind

    bad = ComponentSet([Component(t1, ComponentKind.CYCLE), Component(t2, ComponentKind.CYCLE)])
    with pytest.raises(InvariantBreach):
        inv.check_component_ears(bad)


def test_decomposition_checks_on_corpus(corpus):
    total = 0
    for g in corpus[:300]:
        tri = triconnected_components(g)
        total += inv.check_decomposition(g, tri, seeds=(None, 2))
    assert total > 1000


def test_checks_scale_without_oracle():
    g = gen.k4chain(40, "edge")
    tri = triconnected_components(g)
    assert inv.check_decomposition(g, tri, with_oracle=False) > 0
    steps = direct_split_sequence(tri, 0)
    assert inv.check_no_degree2_pairs(steps) == len(tri) - 1
