"""Splits, merges, 2.5-splits, and triconnected components.

Two engines compute triconnected components:

``"linear"`` (default)
    Hopcroft-Tarjan path search with the Gutwenger-Mutzel corrections,
    followed by the cycle/bond merge.  Runs in linear time.
``"split"``
    Repeatedly finds a separation pair by brute force and splits there,
    then merges.  Slow, but it follows the definitions step by step and
    accepts an order policy, which is what the uniqueness tests vary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from . import connectivity, oracle
from .components import (
    ComponentKind,
    ComponentSet,
    classify,
    component_tree,
)
from .errors import (
    EndpointMismatch,
    InvalidClassSelection,
    InvariantBreach,
    LabelNotShared,
    NotASeparationPair,
    NotASeparator,
    NotBiconnected,
    NotSupporting,
)
from .graph import Edge, LabeledMultigraph

__all__ = [
    "SplitStep",
    "split",
    "split_edges",
    "merge",
    "split_25",
    "split_components",
    "triconnected_components",
    "merge_same_kind",
    "merge_labels",
    "direct_split_sequence",
    "replay_final",
]

_UNBOUNDED = 10**9


class _Allocator:
    """Monotone counters for fresh virtual labels and edge ids."""

    def __init__(self, next_label: int, next_id: int):
        self.next_label = next_label
        self.next_id = next_id

    @classmethod
    def for_graph(cls, g: LabeledMultigraph) -> "_Allocator":
        return cls(g.max_label + 1, g.max_edge_id + 1)

    @classmethod
    def for_graphs(cls, graphs) -> "_Allocator":
        graphs = list(graphs)
        return cls(
            max((h.max_label for h in graphs), default=-1) + 1,
            max((h.max_edge_id for h in graphs), default=-1) + 1,
        )

    def label(self) -> int:
        x = self.next_label
        self.next_label += 1
        return x

    def edge_id(self) -> int:
        x = self.next_id
        self.next_id += 1
        return x


@dataclass(frozen=True)
class SplitStep:
    """One split: ``graph`` became ``g1`` and ``g2``, glued by ``label``."""

    graph: LabeledMultigraph
    pair: tuple
    g1: LabeledMultigraph
    g2: LabeledMultigraph
    label: int


# ---------------------------------------------------------------------------
# Split and merge


def _side(g: LabeledMultigraph, eids, u, v, label, eid) -> LabeledMultigraph:
    keep = set(eids)
    es = [e for e in g.edges if e.id in keep]
    verts = {u, v}
    for e in es:
        verts.add(e.u)
        verts.add(e.v)
    es.append(Edge(eid, u, v, label))
    return LabeledMultigraph(frozenset(verts), tuple(es))


def split_edges(g: LabeledMultigraph, u: int, v: int, eprime: Iterable[int], alloc: Optional[_Allocator] = None):
    """Split at ``{u, v}`` with ``E'`` given directly as edge ids.

    ``E'`` must be a union of separation classes with at least two edges on
    each side.  Returns ``(G1, G2, label)``.
    """
    eprime = frozenset(eprime)
    classes = oracle.separation_classes(g, u, v)
    if len(classes) < 2:
        raise NotASeparationPair(f"{{{u}, {v}}} has a single separation class")
    for c in classes:
        if c & eprime and not c <= eprime:
            raise InvalidClassSelection("E' cuts through a separation class")
    rest = frozenset(g.edge_ids()) - eprime
    if min(len(eprime), len(rest)) < 2:
        raise InvalidClassSelection(
            f"E' leaves {len(eprime)} / {len(rest)} edges; both sides need at least 2"
        )
    if alloc is None:
        alloc = _Allocator.for_graph(g)
    label = alloc.label()
    g1 = _side(g, eprime, u, v, label, alloc.edge_id())
    g2 = _side(g, rest, u, v, label, alloc.edge_id())
    return g1, g2, label


def split(g: LabeledMultigraph, pair, selection: Iterable[int], alloc: Optional[_Allocator] = None):
    """Split ``g`` at ``pair = (u, v)`` taking the classes indexed by ``selection`` as ``E'``.

    Class indices refer to :func:`mixedconn.oracle.separation_classes`
    (ordered by smallest edge id).  Returns ``(G1, G2, label)``.
    """
    u, v = pair
    classes = oracle.separation_classes(g, u, v)
    total = len(g.edges)
    if len(classes) < 2 or not oracle._has_valid_union([len(c) for c in classes], total):
        raise NotASeparationPair(f"{{{u}, {v}}} is not a separation pair")
    selection = sorted(set(selection))
    if not selection or any(not 0 <= i < len(classes) for i in selection):
        raise InvalidClassSelection(f"class indices {selection} out of range 0..{len(classes) - 1}")
    eprime = frozenset().union(*(classes[i] for i in selection))
    return split_edges(g, u, v, eprime, alloc)


def merge(g1: LabeledMultigraph, g2: LabeledMultigraph, label: int) -> LabeledMultigraph:
    """Glue ``g1`` and ``g2`` along the virtual edges carrying ``label``.

    Only the endpoints of those edges are identified; any other vertex names
    the two graphs have in common are renamed apart in ``g2``.  Edge ids of
    ``g2`` that clash with ``g1`` are moved above both.
    """
    try:
        e1 = g1.edge_with_label(label)
        e2 = g2.edge_with_label(label)
    except Exception:
        raise LabelNotShared(f"label {label} does not occur in both graphs") from None
    if e1.ends() != e2.ends():
        raise EndpointMismatch(f"label {label} joins {e1.ends()} in one graph and {e2.ends()} in the other")
    pair = set(e1.ends())
    clash = (g1.vertices & g2.vertices) - pair
    rename = {}
    if clash:
        nxt = max(g1.vertices | g2.vertices) + 1
        for x in sorted(clash):
            rename[x] = nxt
            nxt += 1
    ids1 = {e.id for e in g1.edges if e.id != e1.id}
    nxt_id = max(max(ids1, default=-1), g2.max_edge_id) + 1
    edges = [e for e in g1.edges if e.id != e1.id]
    for e in g2.edges:
        if e.id == e2.id:
            continue
        f = e._replace(u=rename.get(e.u, e.u), v=rename.get(e.v, e.v))
        if f.id in ids1:
            f = f._replace(id=nxt_id)
            nxt_id += 1
        edges.append(f)
    verts = g1.vertices | frozenset(rename.get(x, x) for x in g2.vertices)
    return LabeledMultigraph(verts, tuple(sorted(edges, key=lambda e: e.id)))


def split_25(g: LabeledMultigraph, s, support, alloc: Optional[_Allocator] = None):
    """2.5-split at separator ``s = (c, e)`` with ``support = (a, c)``.

    Returns ``(G_a + ac, G_b + ba + ac)``; both new edges are virtual with one
    fresh label and the separator edge ``ba`` stays in the second graph.
    """
    s = oracle.VertexEdgeSeparator(*s)
    a, c = support
    supports = oracle.supports_of(g, s)
    if (a, c) not in supports:
        if (c, a) in supports:
            a, c = c, a
        else:
            raise NotSupporting(f"{{{a}, {c}}} does not support {tuple(s)}")
    e = g.edge(s.e)
    b = e.other(a)
    if alloc is None:
        alloc = _Allocator.for_graph(g)
    label = alloc.label()
    ga = oracle.side_graph(g, s, a)
    gb = oracle.side_graph(g, s, b)
    g1 = LabeledMultigraph(ga.vertices, ga.edges + (Edge(alloc.edge_id(), a, c, label),))
    g2 = LabeledMultigraph(
        gb.vertices | {a}, gb.edges + (e, Edge(alloc.edge_id(), a, c, label))
    )
    return g1, g2


# ---------------------------------------------------------------------------
# Merging inside component sets


def merge_labels(cs: ComponentSet, labels) -> ComponentSet:
    """Merge along every label in ``labels`` at once.

    Components joined by those labels collapse into one graph that keeps all
    other edges.  Untouched components keep their kind; merged ones are
    classified by shape.  Result order follows the smallest member index.
    """
    labels = set(labels)
    n = len(cs.components)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairing = cs.pairing
    for lab in sorted(labels):
        occ = pairing.get(lab, ())
        if len(occ) != 2:
            raise LabelNotShared(f"label {lab} does not occur exactly twice")
        ra, rb = find(occ[0][0]), find(occ[1][0])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    graphs, kinds = [], []
    for root in sorted(groups):
        members = groups[root]
        if len(members) == 1:
            c = cs.components[members[0]]
            graphs.append(c.graph)
            kinds.append(c.kind)
            continue
        verts = set()
        edges = []
        for i in members:
            gi = cs.components[i].graph
            verts |= gi.vertices
            edges.extend(e for e in gi.edges if e.label not in labels)
        edges.sort(key=lambda e: e.id)
        h = LabeledMultigraph(frozenset(verts), tuple(edges))
        graphs.append(h)
        kinds.append(classify(h))
    return ComponentSet.of(graphs, kinds)


def merge_same_kind(cs: ComponentSet, kind: ComponentKind) -> ComponentSet:
    """Merge every pair of ``kind`` components sharing a label, to a fixpoint."""
    labels = [
        lab
        for lab, occ in cs.pairing.items()
        if len(occ) == 2
        and cs.components[occ[0][0]].kind is kind
        and cs.components[occ[1][0]].kind is kind
    ]
    if not labels:
        return cs
    return merge_labels(cs, labels)


def _merge_fixpoint(cs: ComponentSet) -> ComponentSet:
    cs = merge_same_kind(cs, ComponentKind.CYCLE)
    return merge_same_kind(cs, ComponentKind.BOND)


# ---------------------------------------------------------------------------
# Split engine


def _split_options(h: LabeledMultigraph):
    """``(pair, E')`` candidates of ``h`` in lexicographic order."""
    total = len(h.edges)
    out = []
    for u, v in oracle.separation_pairs(h, _UNBOUNDED, _UNBOUNDED):
        classes = oracle._classes(h, u, v)
        for sel in oracle.valid_class_unions(classes, total):
            ep = frozenset().union(*(classes[i] for i in sel))
            out.append(((u, v), ep))
    return out


def _lexicographic_choice(h: LabeledMultigraph):
    total = len(h.edges)
    for u, v in oracle.separation_pairs(h, _UNBOUNDED, _UNBOUNDED):
        classes = oracle._classes(h, u, v)
        best = None
        for sel in oracle.valid_class_unions(classes, total):
            ep = tuple(sorted(frozenset().union(*(classes[i] for i in sel))))
            if best is None or ep < best:
                best = ep
        return (u, v), frozenset(best)
    return None


def split_components(g: LabeledMultigraph, policy: Optional[int] = None, record: Optional[list] = None) -> ComponentSet:
    """Split until nothing splits any more.

    ``policy=None`` always takes the smallest separation pair and the
    smallest ``E'`` (compared as sorted edge-id tuples) of the first graph
    that can be split.  An integer seeds uniformly random choices instead.
    When ``record`` is a list, each :class:`SplitStep` is appended to it.
    """
    _require_biconnected(g)
    rng = random.Random(policy) if policy is not None else None
    alloc = _Allocator.for_graph(g)
    done = []
    todo = [g]
    while todo:
        idx = rng.randrange(len(todo)) if rng else 0
        h = todo.pop(idx)
        if len(h.vertices) <= 2 and len(h.edges) <= 3:
            done.append(h)
            continue
        if rng:
            options = _split_options(h)
            choice = rng.choice(options) if options else None
        else:
            choice = _lexicographic_choice(h)
        if choice is None:
            done.append(h)
            continue
        (u, v), ep = choice
        g1, g2, label = split_edges(h, u, v, ep, alloc)
        if record is not None:
            record.append(SplitStep(h, (u, v), g1, g2, label))
        if rng:
            todo.extend((g1, g2))
        else:
            todo[0:0] = [g1, g2]
    return ComponentSet.of(done)


def _require_biconnected(g: LabeledMultigraph) -> None:
    if not g.vertices or not connectivity.is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")


# ---------------------------------------------------------------------------
# Linear engine


def _linear(g: LabeledMultigraph) -> ComponentSet:
    from ._hopcroft_tarjan import raw_split_components

    raw = raw_split_components(g)
    nhost = len(raw.host_edges)
    alloc = _Allocator.for_graph(g)
    labels = {}
    graphs = []
    for comp in raw.components:
        es = []
        verts = set()
        for i in comp:
            if i < nhost:
                e = raw.host_edges[i]
            else:
                lab = labels.get(i)
                if lab is None:
                    lab = labels[i] = alloc.label()
                u, v = raw.ends[i]
                e = Edge(alloc.edge_id(), u, v, lab)
            es.append(e)
            verts.add(e.u)
            verts.add(e.v)
        es.sort(key=lambda e: e.id)
        graphs.append(LabeledMultigraph(frozenset(verts), tuple(es)))
    return ComponentSet.of(graphs)


def triconnected_components(
    g: LabeledMultigraph,
    engine: str = "linear",
    policy: Optional[int] = None,
    assume_biconnected: bool = False,
) -> ComponentSet:
    """Triconnected components: cycles, bonds and rigid graphs.

    Hosts on at most two vertices are returned as one component.  Virtual
    edges already present in ``g`` are treated as ordinary edges but keep
    their labels; new labels start above the largest one in ``g``.
    ``assume_biconnected`` skips the input check for callers that already
    know the answer, such as the per-block drivers.
    """
    if not assume_biconnected:
        _require_biconnected(g)
    if len(g.vertices) <= 2:
        return ComponentSet.of([g])
    if engine == "linear":
        raw = _linear(g)
    elif engine == "split":
        raw = split_components(g, policy)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return _merge_fixpoint(raw).canonical_order()


# ---------------------------------------------------------------------------
# Direct split sequences


def direct_split_sequence(tri: ComponentSet, seed: Optional[int] = None) -> list:
    """Splits that take the merged host straight to ``tri``.

    The tree edges of ``tri`` are cut one at a time (ascending label, or in
    an order drawn from ``random.Random(seed)``).  Every cut is replayed as a
    genuine split of the current graph and checked against the separation
    classes, so the sequence is valid by construction; the labels of the
    resulting graphs are exactly those of ``tri``.
    """
    tree = component_tree(tri)
    order = [lab for _, _, lab in tree.edges]
    order.sort()
    if seed is not None:
        random.Random(seed).shuffle(order)
    cut = set()
    steps = []
    # groups are connected pieces of the tree after removing the cut labels
    adj = tree.adjacency()

    def piece(start, banned):
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y, lab in adj[x]:
                if lab not in banned and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def glue(members):
        verts = set()
        edges = []
        for i in members:
            gi = tri.components[i].graph
            verts |= gi.vertices
            # labels with both ends inside the piece are still glued
            edges.extend(e for e in gi.edges if e.label is None or not _inside(tri, e.label, members))
        edges.sort(key=lambda e: e.id)
        return LabeledMultigraph(frozenset(verts), tuple(edges))

    for lab in order:
        occ = tri.pairing[lab]
        i, j = occ[0][0], occ[1][0]
        host = glue(piece(i, cut))
        cut.add(lab)
        g1 = glue(piece(i, cut))
        g2 = glue(piece(j, cut))
        pair = g1.edge_with_label(lab).ends()
        eprime = {e.id for e in g1.edges if e.label != lab}
        classes = oracle.separation_classes(host, *pair)
        for c in classes:
            if c & eprime and not c <= eprime:
                raise InvariantBreach(f"cut of label {lab} is not a union of separation classes")
        if min(len(eprime), len(host.edges) - len(eprime)) < 2:
            raise InvariantBreach(f"cut of label {lab} leaves fewer than 2 edges on a side")
        steps.append(SplitStep(host, pair, g1, g2, lab))
    return steps


def _inside(tri: ComponentSet, label: int, members: set) -> bool:
    occ = tri.pairing[label]
    return occ[0][0] in members and occ[1][0] in members


def replay_final(g: LabeledMultigraph, steps: list) -> list:
    """The working set of graphs after carrying out ``steps`` on ``g``."""
    work = [g]
    for st in steps:
        try:
            k = work.index(st.graph)
        except ValueError:
            raise InvariantBreach("split step refers to a graph not in the working set") from None
        work[k : k + 1] = [st.g1, st.g2]
    return work
