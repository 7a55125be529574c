"""Graph families and seeded random corpora.

Vertices are ``0 .. n-1`` and edge ids follow list order unless stated
otherwise.  Everything random goes through ``random.Random(seed)`` so the
same seed always produces the same graph.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from .errors import GraphError
from .graph import Edge, LabeledMultigraph, build

__all__ = [
    "cycle",
    "bond",
    "complete",
    "complete_bipartite",
    "prism",
    "wheel",
    "glue",
    "k4chain",
    "random_biconnected",
    "random_eulerian_biconnected",
    "small_biconnected_simple",
    "random_corpus",
    "eulerian_corpus",
    "cubic_3connected",
    "from_networkx",
    "degenerate_example",
    "middle_example",
    "GLUE_MODES",
]

GLUE_MODES = ("share-edge", "share-pair-no-edge", "2.5-attach")


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def cycle(n: int) -> LabeledMultigraph:
    _check(n >= 2, "cycle needs n >= 2")
    return build(range(n), [(i, (i + 1) % n) for i in range(n)])


def bond(k: int) -> LabeledMultigraph:
    _check(k >= 1, "bond needs k >= 1")
    return build([0, 1], [(0, 1)] * k)


def complete(n: int) -> LabeledMultigraph:
    _check(n >= 1, "complete graph needs n >= 1")
    return build(range(n), list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> LabeledMultigraph:
    _check(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    return build(range(m + n), [(i, m + j) for i in range(m) for j in range(n)])


def prism(n: int) -> LabeledMultigraph:
    """Prism on ``n`` vertices (two ``n/2``-cycles joined by a matching).

    ``prism(8)`` is the cube.
    """
    _check(n >= 6 and n % 2 == 0, "prism needs an even number of vertices >= 6")
    k = n // 2
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return build(range(n), edges)


def wheel(n: int) -> LabeledMultigraph:
    """Wheel with hub ``0`` and rim ``1 .. n-1``."""
    _check(n >= 4, "wheel needs n >= 4")
    rim = list(range(1, n))
    edges = [(0, x) for x in rim] + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return build(range(n), edges)


def from_networkx(h: nx.Graph) -> LabeledMultigraph:
    """Relabel nodes to ``0 .. n-1`` (sorted order) and copy the edges."""
    nodes = sorted(h.nodes())
    idx = {x: i for i, x in enumerate(nodes)}
    edges = sorted(tuple(sorted((idx[u], idx[v]))) for u, v in h.edges())
    return build(range(len(nodes)), edges)


def _first_edge(g: LabeledMultigraph) -> Edge:
    return min(g.edges, key=lambda e: e.id)


def glue(a: LabeledMultigraph, b: LabeledMultigraph, mode: str = "share-edge") -> LabeledMultigraph:
    """Combine two graphs along their first edges (smallest id).

    ``share-edge``
        identify the two edges; one copy survives.
    ``share-pair-no-edge``
        identify the endpoints and drop both edges.
    ``2.5-attach``
        subdivide ``b``'s first edge ``pq`` by a new vertex ``s``, identify
        ``a``'s first edge ``xy`` with ``ps`` and drop both of those.  The
        result has the vertex-edge-separator ``(p, sq)``.

    Vertices of ``b`` other than the identified ones are shifted above
    those of ``a``; edges are renumbered ``0 .. m-1``.
    """
    _check(mode in GLUE_MODES, f"unknown glue mode {mode!r}; expected one of {GLUE_MODES}")
    ea, eb = _first_edge(a), _first_edge(b)
    x, y = ea.u, ea.v
    p, q = eb.u, eb.v
    shift = max(a.vertices) + 1
    if mode == "2.5-attach":
        # y plays the subdivision vertex s, x plays p
        mp = {v: v + shift for v in b.vertices}
        mp[p] = x
        edges = [(e.u, e.v) for e in a.edges if e.id != ea.id]
        for e in sorted(b.edges, key=lambda e: e.id):
            if e.id == eb.id:
                edges.append((y, mp[q]))
            else:
                edges.append((mp[e.u], mp[e.v]))
        return _relabel(edges)
    mapping = {p: x, q: y}
    for v in b.vertices:
        if v not in mapping:
            mapping[v] = v + shift
    edges = [(e.u, e.v) for e in a.edges if not (mode == "share-pair-no-edge" and e.id == ea.id)]
    for e in sorted(b.edges, key=lambda e: e.id):
        if e.id == eb.id:
            continue
        edges.append((mapping[e.u], mapping[e.v]))
    return _relabel(edges)


def _relabel(edges) -> LabeledMultigraph:
    verts = sorted({x for e in edges for x in e})
    idx = {x: i for i, x in enumerate(verts)}
    return build(range(len(verts)), [(idx[u], idx[v]) for u, v in edges])


def k4chain(n: int, glue_at: str = "edge") -> LabeledMultigraph:
    """``n`` copies of K4 in a chain.

    ``glue_at="edge"``: consecutive copies share one edge (a single block,
    ``5n + 1`` edges).  ``glue_at="vertex"``: consecutive copies share one
    vertex (``n`` blocks, ``6n`` edges).
    """
    _check(n >= 1, "k4chain needs n >= 1")
    edges = []
    if glue_at == "edge":
        a, b = 0, 1
        nxt = 2
        edges.append((a, b))
        for _ in range(n):
            c, d = nxt, nxt + 1
            nxt += 2
            edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
            a, b = c, d
        return build(range(nxt), edges)
    if glue_at == "vertex":
        base = 0
        for _ in range(n):
            vs = [base, base + 1, base + 2, base + 3]
            edges += list(combinations(vs, 2))
            base += 3
        return build(range(base + 1), edges)
    raise GraphError(f"glue_at must be 'edge' or 'vertex', got {glue_at!r}")


# ---------------------------------------------------------------------------
# Random graphs


def _shuffled(rng: random.Random, n: int, edges) -> LabeledMultigraph:
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in edges]
    rng.shuffle(edges)
    return build(range(n), edges)


def random_biconnected(n: int, m: int, seed: int = 0, multigraph: bool = True) -> LabeledMultigraph:
    """A random biconnected graph with ``n`` vertices and ``m`` edges.

    Built as an open ear decomposition: a starting cycle, then ``m - n``
    ears between distinct existing vertices carrying the remaining vertices.
    With ``multigraph=False`` ears that would duplicate an edge are
    rejected and retried, which may fail for dense requests.
    """
    _check(n >= 2, "need n >= 2")
    _check(m >= n or (n == 2 and m >= 1), "need m >= n (or n = 2, m >= 1)")
    rng = random.Random(seed)
    if n == 2:
        _check(multigraph or m == 1, "a simple graph on 2 vertices has 1 edge")
        return build([0, 1], [(0, 1)] * m)
    ears = m - n
    _check(multigraph or m <= n * (n - 1) // 2, "too many edges for a simple graph")
    for _attempt in range(200):
        if ears == 0:
            k = n
        else:
            k = rng.randint(3 if not multigraph else 2, n)
        rest = n - k
        # random composition of `rest` vertices into `ears` parts
        counts = [0] * ears
        for _ in range(rest):
            counts[rng.randrange(ears)] += 1
        edges = [(i, (i + 1) % k) for i in range(k)] if k > 2 else [(0, 1), (0, 1)]
        if k == 2 and not multigraph:
            continue
        present = {tuple(sorted(e)) for e in edges}
        nxt = k
        ok = True
        for t in counts:
            a, b = rng.sample(range(nxt), 2)
            path = [a] + list(range(nxt, nxt + t)) + [b]
            nxt += t
            new = [(path[i], path[i + 1]) for i in range(len(path) - 1)]
            if not multigraph and any(tuple(sorted(e)) in present for e in new):
                ok = False
                break
            present.update(tuple(sorted(e)) for e in new)
            edges += new
        if ok:
            return _shuffled(rng, n, edges)
    raise GraphError(f"could not build a simple biconnected graph with n={n}, m={m}")


def random_eulerian_biconnected(seed: int = 0, max_vertices: int = 8, max_edges: int = 14) -> LabeledMultigraph:
    """A random biconnected Eulerian multigraph.

    A Hamiltonian cycle plus random extra cycles (digons allowed), so every
    degree stays even.
    """
    rng = random.Random(seed)
    n = rng.randint(3, max_vertices)
    n = min(n, max_edges)
    edges = [(i, (i + 1) % n) for i in range(n)]
    budget = max_edges - n
    rounds = rng.randint(0, 4)
    for _ in range(rounds):
        if budget < 2:
            break
        k = rng.randint(2, min(n, budget))
        vs = rng.sample(range(n), k)
        if k == 2:
            edges += [(vs[0], vs[1]), (vs[0], vs[1])]
        else:
            edges += [(vs[i], vs[(i + 1) % k]) for i in range(k)]
        budget -= k
    return _shuffled(rng, n, edges)


# ---------------------------------------------------------------------------
# Corpora


def small_biconnected_simple(max_vertices: int = 6) -> Iterator[LabeledMultigraph]:
    """Every simple biconnected graph on 2 .. ``max_vertices`` vertices, up to isomorphism.

    Taken from the networkx graph atlas (complete up to 7 vertices).
    """
    _check(max_vertices <= 7, "the atlas only covers graphs on at most 7 vertices")
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if k < 2 or k > max_vertices or h.number_of_edges() == 0:
            continue
        if nx.is_connected(h) and (k == 2 or nx.is_biconnected(h)):
            yield from_networkx(h)


def random_corpus(count: int = 500, seed: int = 0, max_vertices: int = 8, max_edges: int = 14) -> Iterator[LabeledMultigraph]:
    """Seeded random biconnected multigraphs within the given bounds."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_vertices)
        lo = 1 if n == 2 else n
        m = rng.randint(lo, max(lo, max_edges))
        yield random_biconnected(n, m, seed=rng.randrange(2**32))


def eulerian_corpus(count: int = 100, seed: int = 0, max_vertices: int = 8, max_edges: int = 14) -> Iterator[LabeledMultigraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_eulerian_biconnected(rng.randrange(2**32), max_vertices, max_edges)


def cubic_3connected(max_vertices: int = 8) -> list:
    """All simple cubic 3-connected graphs on at most ``max_vertices`` vertices, up to isomorphism."""
    out = []
    for n in range(4, max_vertices + 1, 2):
        found = []
        for edges in _cubic_labeled(n):
            h = nx.Graph(edges)
            if nx.node_connectivity(h) < 3:
                continue
            if any(nx.is_isomorphic(h, f) for f in found):
                continue
            found.append(h)
        out.extend(from_networkx(h) for h in found)
    return out


def _cubic_labeled(n: int):
    """Simple cubic graphs on ``0 .. n-1`` by backtracking, at least one per isomorphism class."""
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges = []

    def rec():
        v = next((x for x in range(n) if deg[x] < 3), None)
        if v is None:
            yield list(edges)
            return
        fresh_tried = False
        for w in range(v + 1, n):
            if deg[w] < 3 and w not in adj[v]:
                # untouched vertices are interchangeable, try only the first
                if deg[w] == 0:
                    if fresh_tried:
                        continue
                    fresh_tried = True
                deg[v] += 1
                deg[w] += 1
                adj[v].add(w)
                adj[w].add(v)
                edges.append((v, w))
                yield from rec()
                edges.pop()
                adj[v].discard(w)
                adj[w].discard(v)
                deg[v] -= 1
                deg[w] -= 1

    yield from rec()


# ---------------------------------------------------------------------------
# The worked reduction example


def degenerate_example() -> LabeledMultigraph:
    """The 8-vertex critical degenerate graph of the worked reduction example."""
    edges = [
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
        (1, 4), (1, 6), (2, 5), (5, 8), (3, 7),
    ]
    return build(range(1, 9), edges)


def middle_example() -> LabeledMultigraph:
    """The 7-vertex graph obtained from :func:`degenerate_example` by removing 6 and adding 57."""
    edges = [
        (1, 2), (2, 3), (3, 4), (4, 5), (4, 1), (2, 5),
        (5, 7), (7, 8), (8, 5), (3, 7), (8, 1),
    ]
    return build([1, 2, 3, 4, 5, 7, 8], edges)
