"""Red/green coloring of virtual edges and the 2.5-connected components.

A virtual label of the triconnected components is red when the ears of its
two edges are both trivial, or when one is trivial and the other is a closed
ear made only of virtual edges.  Every other label is green.  Merging all red
labels turns the triconnected components into the 2.5-connected components.

:func:`simulate_coloring` replays the same coloring the slow way, along an
explicit split sequence; it exists to cross-check the structural rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from . import connectivity, oracle
from .components import (
    ComponentKind,
    ComponentSet,
    ComponentTree,
    component_tree,
)
from .errors import NotBiconnected, NotTriconnectedComponents, PairingBroken, SequenceIncomplete
from .graph import LabeledMultigraph, ear_of
from .splitmerge import merge_labels, replay_final, triconnected_components

__all__ = [
    "Color",
    "Components25",
    "color_virtual_edges",
    "simulate_coloring",
    "components_25",
    "is_25_connected",
    "is_triconnected",
    "tree_is_minor",
    "reconcile",
]


class Color(enum.Enum):
    RED = "red"
    GREEN = "green"


def _validate(tri: ComponentSet):
    try:
        tree = component_tree(tri)
    except PairingBroken as ex:
        raise NotTriconnectedComponents(str(ex)) from None
    for c in tri.components:
        g = c.graph
        if c.kind is ComponentKind.BOND and len(g.vertices) != 2:
            raise NotTriconnectedComponents("bond component with more than 2 vertices")
        if c.kind is ComponentKind.CYCLE and not all(g.degree(x) == 2 for x in g.vertices):
            raise NotTriconnectedComponents("cycle component is not a cycle")
        if len(tri.components) > 1 and c.kind is ComponentKind.BOND and len(g.edges) < 3:
            raise NotTriconnectedComponents("bond component with fewer than 3 edges")
    for i, j, lab in tree.edges:
        ki, kj = tri.components[i].kind, tri.components[j].kind
        if ki is kj and ki is not ComponentKind.RIGID:
            raise NotTriconnectedComponents(f"label {lab} joins two {ki.value} components")
    return tree


def _all_virtual_cycle(g: LabeledMultigraph, ear) -> bool:
    return ear.closed and all(g.edge(i).label is not None for i in ear.edge_ids)


def color_virtual_edges(tri: ComponentSet) -> dict:
    """Color every virtual label of a set of triconnected components."""
    _validate(tri)
    out = {}
    for lab, ((i, eid), (j, fid)) in sorted(tri.pairing.items()):
        gi, gj = tri.components[i].graph, tri.components[j].graph
        ei, ej = ear_of(gi, eid), ear_of(gj, fid)
        red = (ei.trivial and ej.trivial) or (
            (ei.trivial and _all_virtual_cycle(gj, ej)) or (ej.trivial and _all_virtual_cycle(gi, ei))
        )
        out[lab] = Color.RED if red else Color.GREEN
    return out


# ---------------------------------------------------------------------------
# Sequential simulation


def _matching_separators(step):
    """Separators ``(c, e)`` of the split graph for which the step is their 2.5-split."""
    h = step.graph
    if h.is_triangle():
        return []
    x, y = step.pair
    side1 = {e.id for e in step.g1.edges if e.label != step.label}
    side2 = {e.id for e in step.g2.edges if e.label != step.label}
    found = []
    for c, a in ((x, y), (y, x)):
        for e in h.incident(a):
            if e.other(a) == c:
                continue
            s = oracle.VertexEdgeSeparator(c, e.id)
            if connectivity.is_connected(h, removed_vertices=(c,), removed_edges=(e.id,)):
                continue
            ga = oracle.side_graph(h, s, a)
            if len(ga.edges) < 2:
                continue
            ids = {f.id for f in ga.edges}
            if ids == side1 or ids == side2:
                found.append(e)
    return found


def simulate_coloring(g: LabeledMultigraph, steps: list, final: Optional[ComponentSet] = None) -> dict:
    """Color labels by replaying ``steps`` and applying the three split rules.

    A split that is not a 2.5-split makes its label red.  A 2.5-split for a
    separator whose edge is real or green makes every label on the ears of
    the two new edges green.  A 2.5-split only for separators with red
    edges makes its label red.

    ``final``, when given, is the component set the run is supposed to end
    in; the working set must match it up to cycle/bond merges, otherwise
    :class:`SequenceIncomplete` is raised.
    """
    colors = {}
    work = [g]
    for st in steps:
        work_idx = next((i for i, h in enumerate(work) if h == st.graph), None)
        if work_idx is None:
            raise SequenceIncomplete("split step refers to a graph not in the working set")
        seps = _matching_separators(st)
        if not seps:
            colors[st.label] = Color.RED
        elif any(e.label is None or colors.get(e.label) is Color.GREEN for e in seps):
            for part in (st.g1, st.g2):
                e_new = part.edge_with_label(st.label)
                for i in ear_of(part, e_new.id).edge_ids:
                    lab = part.edge(i).label
                    if lab is not None:
                        colors[lab] = Color.GREEN
        else:
            colors[st.label] = Color.RED
        work[work_idx : work_idx + 1] = [st.g1, st.g2]
    if final is not None:
        labels = {e.label for h in work for e in h.virtual_edges}
        if not set(final.labels) <= labels:
            raise SequenceIncomplete("the run does not reach the given components")
        colors = {lab: colors[lab] for lab in final.labels}
    return colors


# ---------------------------------------------------------------------------
# 2.5-connected components


@dataclass(frozen=True)
class Components25:
    """2.5-connected components together with the data they came from.

    Unpacks as ``(components, tree, coloring)`` where ``coloring`` holds the
    surviving (green) labels only.
    """

    components: ComponentSet
    tree: ComponentTree
    coloring: dict
    tricomps: ComponentSet
    tri_tree: ComponentTree
    full_coloring: dict

    def __iter__(self):
        return iter((self.components, self.tree, self.coloring))


def _require_biconnected(g: LabeledMultigraph) -> None:
    if not g.vertices or not connectivity.is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")


def components_25(
    g: LabeledMultigraph,
    engine: str = "linear",
    policy: Optional[int] = None,
    assume_biconnected: bool = False,
) -> Components25:
    """Triconnected components with every red label merged away."""
    if not assume_biconnected:
        _require_biconnected(g)
    tri = triconnected_components(g, engine=engine, policy=policy, assume_biconnected=True)
    tri_tree = _validate(tri)
    full = color_virtual_edges(tri)
    red = sorted(lab for lab, col in full.items() if col is Color.RED)
    comps = merge_labels(tri, red).canonical_order() if red else tri
    tree = component_tree(comps)
    residual = {lab: col for lab, col in full.items() if col is Color.GREEN}
    return Components25(comps, tree, residual, tri, tri_tree, full)


def is_25_connected(g: LabeledMultigraph) -> bool:
    """No cycle among the triconnected components contains a real edge.

    Triangles count as 2.5-connected.
    """
    _require_biconnected(g)
    if g.is_triangle():
        return True
    if len(g.vertices) <= 2:
        return True
    tri = triconnected_components(g)
    return not any(
        c.kind is ComponentKind.CYCLE and any(e.label is None for e in c.graph.edges)
        for c in tri.components
    )


def is_triconnected(g: LabeledMultigraph) -> bool:
    """Biconnected with no separation pair, read off the triconnected components."""
    if not g.vertices or not connectivity.is_biconnected(g):
        return False
    if len(g.vertices) <= 2:
        return len(g.edges) <= 3
    tri = triconnected_components(g)
    if len(tri.components) != 1:
        return False
    c = tri.components[0]
    return not (c.kind is ComponentKind.CYCLE and len(c.graph.edges) >= 4)


# ---------------------------------------------------------------------------
# Trees


def tree_is_minor(t25: ComponentTree, ttri: ComponentTree, coloring: dict) -> bool:
    """Contracting the red tree edges of ``ttri`` gives ``t25``, labels included.

    Labels missing from ``coloring`` count as red, so the residual coloring
    returned by :func:`components_25` works as well as the full one.
    """
    parent = list(range(ttri.num_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    for i, j, lab in ttri.edges:
        if coloring.get(lab) is Color.GREEN:
            kept.append((i, j, lab))
        else:
            parent[find(i)] = find(j)
    q = nx.Graph()
    q.add_nodes_from({find(x) for x in range(ttri.num_nodes)})
    for i, j, lab in kept:
        a, b = find(i), find(j)
        if a == b or q.has_edge(a, b):
            return False
        q.add_edge(a, b, label=lab)
    t = nx.Graph()
    t.add_nodes_from(range(t25.num_nodes))
    for i, j, lab in t25.edges:
        t.add_edge(i, j, label=lab)
    if q.number_of_nodes() != t.number_of_nodes() or q.number_of_edges() != t.number_of_edges():
        return False
    return nx.is_isomorphic(q, t, edge_match=lambda a, b: a["label"] == b["label"])


def reconcile(a: ComponentSet, coloring_a: dict, b: ComponentSet, coloring_b: dict) -> bool:
    """True iff two colorings of decompositions of one host agree label by label.

    Labels are matched through their host-level signatures (endpoint pair
    plus the real edges on one side of the tree cut).
    """
    from .components import label_signatures

    sa, sb = label_signatures(a), label_signatures(b)
    ca = {sa[lab]: col for lab, col in coloring_a.items()}
    cb = {sb[lab]: col for lab, col in coloring_b.items()}
    return ca == cb
