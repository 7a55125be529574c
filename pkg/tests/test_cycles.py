from fractions import Fraction

import networkx as nx
import pytest

from mixedconn import generators as gen
from mixedconn.cycles import (
    CycleDecomposition,
    audit,
    c_via_components,
    hajos_bound,
    hajos_check,
    is_cycle_decomposition,
    is_eulerian,
    max_cycles,
    min_cycles,
    multi_excess,
    nu_via_components,
)
from mixedconn.errors import NotBiconnected, NotEulerian, SizeExceeded
from mixedconn.graph import build
from mixedconn.oracle import VertexEdgeSeparator, supports_of, vertex_edge_separators
from mixedconn.splitmerge import split_25


def _partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _is_cycle(g, ids):
    h = nx.MultiGraph([g.edge(i).ends() for i in ids])
    return nx.is_connected(h) and all(d == 2 for _, d in h.degree())


def _by_partitions(g):
    sizes = [len(p) for p in _partitions(sorted(g.edge_ids())) if all(_is_cycle(g, b) for b in p)]
    return min(sizes), max(sizes)


def test_closed_forms():
    for n in range(2, 9):
        assert min_cycles(gen.cycle(n))[0] == max_cycles(gen.cycle(n))[0] == 1
    assert (min_cycles(gen.bond(6))[0], max_cycles(gen.bond(6))[0]) == (3, 3)
    k5 = gen.complete(5)
    assert (min_cycles(k5)[0], max_cycles(k5)[0]) == (2, 3)
    k24 = gen.complete_bipartite(2, 4)
    assert (min_cycles(k24)[0], max_cycles(k24)[0]) == (2, 2)


def test_bowtie():
    bowtie = build(edges=[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert min_cycles(bowtie)[0] == max_cycles(bowtie)[0] == 2
    a = audit(bowtie, "bowtie")
    assert a.block_composed and a.line() == "bowtie 2 2 2 PASS blocks"


def test_witnesses_are_decompositions(eulerian_graphs):
    for g in eulerian_graphs[:40]:
        for fn in (min_cycles, max_cycles):
            n, w = fn(g)
            assert isinstance(w, CycleDecomposition) and w.cardinality == n
            assert is_cycle_decomposition(g, w)


def test_is_cycle_decomposition_rejects_bad_parts():
    c4 = gen.cycle(4)
    assert not is_cycle_decomposition(c4, CycleDecomposition(((0, 1), (2, 3))))
    assert not is_cycle_decomposition(c4, CycleDecomposition(((0, 1, 2),)))


def test_exhaustive_matches_partition_oracle(eulerian_graphs):
    checked = 0
    for g in eulerian_graphs:
        if len(g.edges) > 9:
            continue
        assert (min_cycles(g)[0], max_cycles(g)[0]) == _by_partitions(g)
        checked += 1
    assert checked >= 10


def test_component_formula(eulerian_graphs):
    for g in eulerian_graphs:
        assert c_via_components(g) == min_cycles(g)[0]
        assert nu_via_components(g) == max_cycles(g)[0]


def test_split_identity(eulerian_graphs):
    seen = 0
    for g in eulerian_graphs:
        for s in vertex_edge_separators(g):
            for sup in supports_of(g, s):
                g1, g2 = split_25(g, s, sup)
                if not (is_eulerian(g1) and is_eulerian(g2)):
                    continue
                assert min_cycles(g)[0] == min_cycles(g1)[0] + min_cycles(g2)[0] - 1
                assert max_cycles(g)[0] == max_cycles(g1)[0] + max_cycles(g2)[0] - 1
                seen += 1
                break
    assert seen >= 20


def test_hajos_bound_and_audit(eulerian_graphs):
    for g in eulerian_graphs:
        assert hajos_check(g)
        assert hajos_check(g, route="components")
        a = audit(g)
        assert a.verdict == "PASS" and a.c <= a.bound
    k5 = gen.complete(5)
    assert hajos_bound(k5) == 2
    assert hajos_bound(gen.bond(4)) == 2
    assert hajos_bound(gen.cycle(4)) == Fraction(3, 2)
    assert multi_excess(gen.bond(4)) == 3


def test_errors():
    with pytest.raises(NotEulerian):
        min_cycles(gen.complete(4))
    with pytest.raises(SizeExceeded):
        min_cycles(gen.cycle(20), cap=16)
    bowtie = build(edges=[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    with pytest.raises(NotBiconnected):
        c_via_components(bowtie)


def test_large_cycle_via_components():
    # 20 edges exceed the exhaustive cap, but a single cycle component is tiny to search
    g = gen.cycle(20)
    with pytest.raises(SizeExceeded):
        c_via_components(g)
    glued = gen.glue(gen.complete(5), gen.complete(5), "2.5-attach")
    assert is_eulerian(glued)
    assert c_via_components(glued) == min_cycles(glued, cap=24)[0]
