"""Linear-time connectivity helpers shared by the fast paths.

The definitional (brute-force) versions live in :mod:`mixedconn.oracle`.
"""

from __future__ import annotations

from collections import deque

from .errors import Disconnected
from .graph import LabeledMultigraph


def components(g: LabeledMultigraph, removed_vertices=(), removed_edges=()) -> list:
    """Vertex sets of the connected components of ``g - removed``."""
    dv = set(removed_vertices)
    de = set(removed_edges)
    seen = set(dv)
    out = []
    for s in sorted(g.vertices):
        if s in seen:
            continue
        seen.add(s)
        comp = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in g.incident(x):
                if e.id in de:
                    continue
                y = e.other(x)
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        out.append(comp)
    return out


def is_connected(g: LabeledMultigraph, removed_vertices=(), removed_edges=()) -> bool:
    return len(components(g, removed_vertices, removed_edges)) <= 1


def _block_edge_sets(g: LabeledMultigraph):
    """Yield edge-id lists of the blocks of ``g`` (iterative Hopcroft-Tarjan)."""
    disc = {}
    low = {}
    counter = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        estack = []
        # frame: vertex, id of the tree edge used to enter it, next incidence index
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, pe, i = frame
            inc = g.incident(v)
            if i < len(inc):
                frame[2] = i + 1
                e = inc[i]
                if e.id == pe:
                    continue
                w = e.other(v)
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    estack.append(e.id)
                    stack.append([w, e.id, 0])
                elif disc[w] < disc[v]:
                    estack.append(e.id)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    block = []
                    while True:
                        eid = estack.pop()
                        block.append(eid)
                        if eid == pe:
                            break
                    yield block


def biconnected_blocks(g: LabeledMultigraph) -> list:
    """Blocks (maximal biconnected subgraphs) of a connected graph.

    Blocks partition the edges and are returned ordered by their smallest
    edge id.  A single vertex without edges is its own block.
    """
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    if not g.edges:
        return [g] if g.vertices else []
    out = []
    for ids in _block_edge_sets(g):
        es = tuple(sorted((g.edge(i) for i in ids), key=lambda e: e.id))
        verts = frozenset(x for e in es for x in (e.u, e.v))
        out.append(LabeledMultigraph(verts, es))
    out.sort(key=lambda b: b.edges[0].id)
    return out


def is_biconnected(g: LabeledMultigraph) -> bool:
    """Connected, and no cut vertex (order-2 graphs count as biconnected)."""
    if not is_connected(g):
        return False
    if len(g.vertices) <= 2:
        return True
    blocks = 0
    for _ in _block_edge_sets(g):
        blocks += 1
        if blocks > 1:
            return False
    return True


def bridges(g: LabeledMultigraph, removed_vertices=(), removed_edges=()) -> set:
    """Ids of the bridges of ``g - removed``.  Parallel edges are never bridges."""
    dv = set(removed_vertices)
    de = set(removed_edges)
    disc = {}
    low = {}
    out = set()
    counter = 0
    for root in sorted(g.vertices):
        if root in dv or root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, pe, i = frame
            inc = g.incident(v)
            if i < len(inc):
                frame[2] = i + 1
                e = inc[i]
                if e.id == pe or e.id in de:
                    continue
                w = e.other(v)
                if w in dv:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append([w, e.id, 0])
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        out.add(pe)
    return out
