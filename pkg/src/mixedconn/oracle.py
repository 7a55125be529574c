"""Definition-level connectivity checks.

Everything here is brute force on purpose: these functions are the ground
truth the structural algorithms are tested against, so they follow the
definitions literally and make no attempt to be clever.  Inputs larger than
the configured caps raise :class:`SizeExceeded` instead of silently taking
forever.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import NamedTuple, Optional

from . import connectivity
from .errors import NotASeparator, NotBiconnected, SizeExceeded, UnknownEndpoint
from .graph import LabeledMultigraph

__all__ = [
    "CAP_VERTICES",
    "CAP_EDGES",
    "VertexEdgeSeparator",
    "Vertex2EdgeSeparator",
    "is_connected",
    "is_biconnected",
    "is_3_connected",
    "biconnected_blocks",
    "separation_classes",
    "valid_class_unions",
    "separation_pairs",
    "vertex_edge_separators",
    "separator_sides",
    "supports_of",
    "is_25_connected_bruteforce",
    "is_triconnected_bruteforce",
    "vertex_2edge_separators",
    "is_critical_25_bruteforce",
    "split_components_25_oracle",
]

CAP_VERTICES = 16
CAP_EDGES = 24


class VertexEdgeSeparator(NamedTuple):
    c: int
    e: int


class Vertex2EdgeSeparator(NamedTuple):
    c: int
    e1: int
    e2: int


def _check_cap(g: LabeledMultigraph, cap_vertices: int, cap_edges: int) -> None:
    if len(g.vertices) > cap_vertices or len(g.edges) > cap_edges:
        raise SizeExceeded(
            f"graph with {len(g.vertices)} vertices / {len(g.edges)} edges exceeds "
            f"oracle cap {cap_vertices} / {cap_edges}"
        )


def is_connected(g: LabeledMultigraph) -> bool:
    return connectivity.is_connected(g)


def is_biconnected(g: LabeledMultigraph) -> bool:
    """Connected, and every vertex deletion leaves the rest connected.

    Connected graphs of order at most 2 count as biconnected.
    """
    if not connectivity.is_connected(g):
        return False
    if len(g.vertices) <= 2:
        return True
    return all(connectivity.is_connected(g, removed_vertices=(w,)) for w in g.vertices)


def is_3_connected(g: LabeledMultigraph) -> bool:
    """At least 4 vertices and no set of at most two vertices disconnects."""
    if len(g.vertices) < 4 or not is_biconnected(g):
        return False
    return all(
        connectivity.is_connected(g, removed_vertices=pair)
        for pair in combinations(sorted(g.vertices), 2)
    )


def biconnected_blocks(g: LabeledMultigraph) -> list:
    return connectivity.biconnected_blocks(g)


def _require_biconnected(g: LabeledMultigraph) -> None:
    if not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")


def _classes(g: LabeledMultigraph, u: int, v: int) -> list:
    parent = {e.id: e.id for e in g.edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in g.vertices:
        if x == u or x == v:
            continue
        inc = g.incident(x)
        for e in inc[1:]:
            ra, rb = find(inc[0].id), find(e.id)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for e in g.edges:
        groups.setdefault(find(e.id), []).append(e.id)
    return sorted((frozenset(ids) for ids in groups.values()), key=min)


def separation_classes(g: LabeledMultigraph, u: int, v: int) -> list:
    """Edge classes w.r.t. ``{u, v}``; sorted by smallest edge id.

    Two edges share a class iff some path through both avoids ``u`` and ``v``
    as inner vertices.
    """
    if u == v or u not in g.vertices or v not in g.vertices:
        raise UnknownEndpoint(f"need two distinct vertices of the graph, got {u}, {v}")
    _require_biconnected(g)
    return _classes(g, u, v)


def valid_class_unions(classes: list, total: int) -> list:
    """Index sets I (sorted tuples) whose class union leaves >= 2 edges on each side."""
    k = len(classes)
    sizes = [len(c) for c in classes]
    out = []
    for mask in range(1, (1 << k) - 1):
        s = 0
        for i in range(k):
            if mask >> i & 1:
                s += sizes[i]
        if s >= 2 and total - s >= 2:
            out.append(tuple(i for i in range(k) if mask >> i & 1))
    return out


def _has_valid_union(sizes: list, total: int) -> bool:
    reach = {0}
    for s in sizes:
        reach |= {r + s for r in reach}
    return any(2 <= r <= total - 2 for r in reach)


def separation_pairs(g: LabeledMultigraph, cap_vertices: int = CAP_VERTICES, cap_edges: int = CAP_EDGES) -> list:
    """All separation pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    _check_cap(g, cap_vertices, cap_edges)
    _require_biconnected(g)
    total = len(g.edges)
    out = []
    for u, v in combinations(sorted(g.vertices), 2):
        cls = _classes(g, u, v)
        if len(cls) >= 2 and _has_valid_union([len(c) for c in cls], total):
            out.append((u, v))
    return out


def vertex_edge_separators(g: LabeledMultigraph, cap_vertices: int = CAP_VERTICES, cap_edges: int = CAP_EDGES) -> list:
    """Every ``(c, e)`` with ``g - e - c`` disconnected.

    Triangles have none by definition.  ``c`` ranges over all vertices; when
    ``c`` is an endpoint of ``e`` the test reduces to ``g - c`` and never
    fires on a biconnected graph.
    """
    _check_cap(g, cap_vertices, cap_edges)
    _require_biconnected(g)
    if g.is_triangle():
        return []
    out = []
    for c in sorted(g.vertices):
        for e in sorted(g.edge_ids()):
            if not connectivity.is_connected(g, removed_vertices=(c,), removed_edges=(e,)):
                out.append(VertexEdgeSeparator(c, e))
    return out


def separator_sides(g: LabeledMultigraph, s: VertexEdgeSeparator) -> list:
    """Vertex sets of the components of ``g - e - c``."""
    return connectivity.components(g, removed_vertices=(s.c,), removed_edges=(s.e,))


def _side_of(sides: list, x: int) -> set:
    for side in sides:
        if x in side:
            return side
    raise NotASeparator(f"vertex {x} missing after separator removal")


def side_graph(g: LabeledMultigraph, s: VertexEdgeSeparator, a: int) -> LabeledMultigraph:
    """``G_a``: the graph induced by the side of endpoint ``a`` plus ``c``, without ``e``."""
    sides = separator_sides(g, s)
    part = _side_of(sides, a) | {s.c}
    return g.remove_edges((s.e,)).induced(part)


def supports_of(g: LabeledMultigraph, s: VertexEdgeSeparator) -> list:
    """Pairs ``(a, c)`` supporting the separator: ``a`` an endpoint of ``e`` with |E(G_a)| >= 2."""
    s = VertexEdgeSeparator(*s)
    if s.c not in g.vertices or not g.has_edge(s.e):
        raise NotASeparator(f"{s} does not refer to this graph")
    if g.is_triangle() or connectivity.is_connected(g, removed_vertices=(s.c,), removed_edges=(s.e,)):
        raise NotASeparator(f"{s} is not a vertex-edge-separator")
    e = g.edge(s.e)
    out = []
    for a in sorted((e.u, e.v)):
        if len(side_graph(g, s, a).edges) >= 2:
            out.append((a, s.c))
    return out


def is_25_connected_bruteforce(g: LabeledMultigraph, cap_vertices: int = CAP_VERTICES, cap_edges: int = CAP_EDGES) -> bool:
    if not is_biconnected(g):
        return False
    return not vertex_edge_separators(g, cap_vertices, cap_edges)


def is_triconnected_bruteforce(g: LabeledMultigraph, cap_vertices: int = CAP_VERTICES, cap_edges: int = CAP_EDGES) -> bool:
    if not is_biconnected(g):
        return False
    return not separation_pairs(g, cap_vertices, cap_edges)


def vertex_2edge_separators(g: LabeledMultigraph, cap_vertices: int = CAP_VERTICES, cap_edges: int = CAP_EDGES) -> list:
    """Every ``(c, e1, e2)`` with ``e1 < e2`` and ``g - e1 - e2 - c`` disconnected."""
    _check_cap(g, cap_vertices, cap_edges)
    _require_biconnected(g)
    ids = sorted(g.edge_ids())
    out = []
    for c in sorted(g.vertices):
        for e1, e2 in combinations(ids, 2):
            if not connectivity.is_connected(g, removed_vertices=(c,), removed_edges=(e1, e2)):
                out.append(Vertex2EdgeSeparator(c, e1, e2))
    return out


def is_critical_25_bruteforce(g: LabeledMultigraph, cap_vertices: int = CAP_VERTICES, cap_edges: int = CAP_EDGES) -> bool:
    """2.5-connected, and every edge lies on some vertex-2-edge-separator."""
    if not is_25_connected_bruteforce(g, cap_vertices, cap_edges):
        return False
    covered = set()
    for s in vertex_2edge_separators(g, cap_vertices, cap_edges):
        covered.add(s.e1)
        covered.add(s.e2)
    return covered >= set(g.edge_ids())


def split_components_25_oracle(
    g: LabeledMultigraph,
    seed: Optional[int] = None,
    cap_vertices: int = CAP_VERTICES,
    cap_edges: int = CAP_EDGES,
):
    """2.5-connected components by exhaustive 2.5-splitting, then triangle merging.

    With ``seed=None`` the lexicographically smallest applicable
    ``(c, e, support)`` of the first splittable graph is used each time;
    otherwise choices are drawn from ``random.Random(seed)``.
    """
    from .components import ComponentSet, classify
    from .splitmerge import _Allocator, merge_same_kind, split_25
    from .components import ComponentKind

    _check_cap(g, cap_vertices, cap_edges)
    _require_biconnected(g)
    rng = random.Random(seed) if seed is not None else None
    alloc = _Allocator.for_graph(g)
    done = []
    todo = [g]
    while todo:
        idx = rng.randrange(len(todo)) if rng else 0
        h = todo.pop(idx)
        seps = vertex_edge_separators(h, cap_vertices, cap_edges + 2 * len(g.vertices))
        if not seps:
            done.append(h)
            continue
        options = [(s, sup) for s in seps for sup in supports_of(h, s)]
        s, sup = rng.choice(options) if rng else options[0]
        g1, g2 = split_25(h, s, sup, alloc=alloc)
        if rng:
            todo.extend((g1, g2))
        else:
            todo[0:0] = [g1, g2]
    cs = ComponentSet.of(done)
    return merge_same_kind(cs, ComponentKind.CYCLE)
