"""Acceptance suite.

Each test records its criterion number; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import math
import time

import pytest

from mixedconn import generators as gen
from mixedconn import invariants, oracle
from mixedconn.cli import main
from mixedconn.coloring import components_25, is_25_connected, reconcile, tree_is_minor
from mixedconn.components import merge_all
from mixedconn.critical import (
    is_3_connected,
    is_critical,
    is_critical_structural,
    is_degenerate_graph,
    is_degenerate_separator,
    is_k4,
    reduce_degenerate,
    reduce_nondegenerate,
    reduction_chain,
    tutte_extend,
    tutte_step,
)
from mixedconn.cycles import (
    audit,
    c_via_components,
    hajos_bound,
    is_eulerian,
    max_cycles,
    min_cycles,
    nu_via_components,
)
from mixedconn.equivalence import are_equivalent, graphs_isomorphic
from mixedconn.graph import write_mg
from mixedconn.oracle import supports_of, vertex_edge_separators
from mixedconn.splitmerge import split_25, triconnected_components

SEEDS = range(20)


@pytest.fixture
def criterion(record_property):
    def mark(num, title):
        record_property("criterion", (num, title))

    return mark


def test_c1_oracle_equivalence(criterion, corpus):
    criterion(1, "is_25_connected agrees with the brute force")
    start = time.perf_counter()
    mismatches = [g for g in corpus if is_25_connected(g) != oracle.is_25_connected_bruteforce(g)]
    elapsed = time.perf_counter() - start
    assert len(corpus) == 71 + 500
    assert mismatches == []
    assert elapsed < 120


def test_c2_reconstruction_and_uniqueness(criterion, corpus):
    criterion(2, "reconstruction, 20 seeded reruns, coloring reconciliation")
    for g in corpus:
        ref = components_25(g)
        assert merge_all(ref.tricomps) == g
        for seed in SEEDS:
            run = components_25(g, engine="split", policy=seed)
            assert are_equivalent(ref.tricomps, run.tricomps, strict=True)
            assert reconcile(ref.tricomps, ref.full_coloring, run.tricomps, run.full_coloring)


def test_c3_25_component_uniqueness(criterion, corpus):
    criterion(3, "components_25 matches the exhaustive 2.5-split oracle")
    for g in corpus:
        r = components_25(g)
        assert are_equivalent(r.components, oracle.split_components_25_oracle(g))
        assert tree_is_minor(r.tree, r.tri_tree, r.full_coloring)


def test_c4_structural_facts(criterion, corpus):
    criterion(4, "structural invariants hold on every decomposition run")
    checked = 0
    for g in corpus:
        tri = triconnected_components(g)
        checked += invariants.check_decomposition(g, tri, seeds=SEEDS)
    assert checked > 10_000


def test_c5_criticality(criterion, corpus):
    criterion(5, "structural criticality equals brute force")
    compared = 0
    for g in corpus:
        if oracle.is_25_connected_bruteforce(g):
            assert is_critical_structural(g) == oracle.is_critical_25_bruteforce(g)
            compared += 1
    assert compared > 100
    k4 = gen.complete(4)
    assert is_critical_structural(k4) and oracle.is_critical_25_bruteforce(k4)
    for g in (gen.complete_bipartite(3, 3), gen.complete_bipartite(3, 4), gen.prism(8)):
        assert is_critical_structural(g) and oracle.is_critical_25_bruteforce(g)
        assert is_degenerate_graph(g)


def _assert_reduced(g, out):
    assert len(out.vertices) < len(g.vertices)
    assert is_3_connected(out) and is_critical(out)


def test_c6_reductions(criterion, corpus):
    criterion(6, "worked reduction pipeline, reduction outputs, Tutte round trips")
    fig = gen.degenerate_example()
    mid = reduce_degenerate(fig, 6)
    assert graphs_isomorphic(mid, gen.middle_example())
    ids = {e.ends(): e.id for e in mid.edges}
    g1, g2 = reduce_nondegenerate(mid, (5, ids[(3, 7)], ids[(1, 8)]))
    k33 = gen.complete_bipartite(3, 3)
    assert (graphs_isomorphic(g1, k33) and is_k4(g2)) or (graphs_isomorphic(g2, k33) and is_k4(g1))

    named = [gen.complete_bipartite(3, 4), gen.prism(8), fig, mid, gen.wheel(7)]
    inputs = [g for g in corpus + gen.cubic_3connected(8) + named if is_3_connected(g) and is_critical(g)]
    outputs = 0
    for g in inputs:
        for s in oracle.vertex_2edge_separators(g):
            if not is_degenerate_separator(g, s):
                for out in reduce_nondegenerate(g, s):
                    _assert_reduced(g, out)
                    outputs += 1
        for st in reduction_chain(g):
            for out in st.outputs:
                _assert_reduced(st.input, out)
                outputs += 1
    assert len(inputs) >= 17 and outputs > 50

    for g in gen.cubic_3connected(8):
        if is_k4(g):
            continue
        h, cert = tutte_step(g)
        assert graphs_isomorphic(tutte_extend(h, cert.e, cert.f), g)


def test_c7_cycle_composition(criterion, eulerian_graphs):
    criterion(7, "cycle counts via components, split identity, K5")
    assert len(eulerian_graphs) == 100
    for g in eulerian_graphs:
        assert len(g.edges) <= 14
        assert c_via_components(g) == min_cycles(g)[0]
        assert nu_via_components(g) == max_cycles(g)[0]

    pairs = 0
    for g in gen.eulerian_corpus(400, seed=1):
        if pairs == 50:
            break
        done = False
        for s in vertex_edge_separators(g):
            for sup in supports_of(g, s):
                a, b = split_25(g, s, sup)
                if is_eulerian(a) and is_eulerian(b):
                    assert min_cycles(g)[0] == min_cycles(a)[0] + min_cycles(b)[0] - 1
                    pairs += 1
                    done = True
                    break
            if done:
                break
    assert pairs == 50

    k5 = gen.complete(5)
    assert (min_cycles(k5)[0], max_cycles(k5)[0]) == (2, 3)


def test_c8_hajos_audit(criterion, eulerian_graphs):
    criterion(8, "Hajos bound on every Eulerian corpus graph")
    for i, g in enumerate(eulerian_graphs):
        a = audit(g, f"eulerian[{i}]")
        if a.verdict != "PASS":
            pytest.exit(
                f"HAJOS BOUND VIOLATED: {a.line()} (bound {hajos_bound(g)}); this graph is a counterexample",
                returncode=3,
            )


def _time_comp25(g, tmp_path, name):
    src = tmp_path / f"{name}.mg"
    write_mg(g, src)
    start = time.perf_counter()
    assert main(["comp25", str(src), str(tmp_path / f"{name}.json"), "--blocks"]) == 0
    return time.perf_counter() - start


def _slope(points):
    xs = [math.log(m) for m, _ in points]
    ys = [math.log(t) for _, t in points]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


@pytest.mark.parametrize("glue_at,per_copy", [("edge", 5), ("vertex", 6)])
def test_c9_performance(criterion, tmp_path, glue_at, per_copy):
    criterion(9, "comp25 on a 25,000-copy K4 chain under 10 s, log-log slope <= 1.5")
    big = gen.k4chain(25_000, glue_at)
    elapsed = _time_comp25(big, tmp_path, "big")
    print(f"k4chain(25000, {glue_at}): {len(big.edges)} edges in {elapsed:.2f} s")
    assert elapsed < 10

    points = []
    for m in (10**3, 10**4, 10**5):
        g = gen.k4chain(m // per_copy, glue_at)
        t = min(_time_comp25(g, tmp_path, f"c{m}") for _ in range(2))
        points.append((len(g.edges), t))
    slope = _slope(points)
    print(f"{glue_at} chain timings {points}, slope {slope:.2f}")
    assert slope <= 1.5
