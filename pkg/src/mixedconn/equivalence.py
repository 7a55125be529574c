"""Equivalence of component sets.

Two component sets are equivalent when their members can be paired so that
paired graphs agree up to renaming and relabelling of virtual edges, and the
correspondence between virtual edges is preserved.

Two strengths are offered:

``strict=True``
    vertices and non-virtual edges keep their names; only virtual edges may be
    renamed.  This is the notion under which decompositions of one host graph
    are unique.
``strict=False`` (default)
    each pair only has to be isomorphic as multigraphs (virtual edges onto
    virtual edges, correspondence preserved).

Both reduce to one colored-graph isomorphism problem, solved with VF2.  The
strict case first tries a direct canonical form.
"""

from __future__ import annotations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .components import ComponentSet, label_signatures
from .errors import PairingBroken, SizeExceeded
from .graph import LabeledMultigraph

__all__ = ["are_equivalent", "find_equivalence", "graphs_isomorphic", "DEFAULT_ISO_CAP"]

DEFAULT_ISO_CAP = 16


def _shape(cs: ComponentSet) -> list:
    return sorted(
        (len(c.graph.vertices), len(c.graph.edges), len(c.graph.virtual_edges))
        for c in cs.components
    )


def _strict_canonical(cs: ComponentSet):
    try:
        sig = label_signatures(cs)
    except PairingBroken:
        return None
    if len(set(sig.values())) != len(sig):
        return None
    comps = []
    for c in cs.components:
        g = c.graph
        real = tuple(sorted((e.id, e.ends()) for e in g.edges if e.label is None))
        virt = tuple(sorted(sig[e.label] for e in g.edges if e.label is not None))
        comps.append((tuple(sorted(g.vertices)), real, virt))
    return tuple(sorted(comps))


def _encode(cs: ComponentSet, strict: bool) -> nx.Graph:
    h = nx.Graph()
    for i, c in enumerate(cs.components):
        g = c.graph
        h.add_node(("C", i), t="C", c=None)
        for x in g.vertices:
            h.add_node(("V", i, x), t="V", c=x if strict else None)
            h.add_edge(("C", i), ("V", i, x))
        for e in g.edges:
            node = ("E", i, e.id)
            if e.label is None:
                h.add_node(node, t="R", c=(e.id, e.ends()) if strict else None)
            else:
                h.add_node(node, t="X", c=None)
                lab = ("L", e.label)
                if lab not in h:
                    h.add_node(lab, t="L", c=None)
                h.add_edge(node, lab)
            h.add_edge(node, ("V", i, e.u))
            h.add_edge(node, ("V", i, e.v))
    return h


def _node_match(a, b):
    return a["t"] == b["t"] and a["c"] == b["c"]


def find_equivalence(a: ComponentSet, b: ComponentSet, strict: bool = False, cap: int = DEFAULT_ISO_CAP):
    """Return ``(component_map, label_map)`` witnessing equivalence, or ``None``.

    ``component_map[i]`` is the index in ``b`` paired with component ``i`` of
    ``a``; ``label_map`` sends labels of ``a`` to labels of ``b``.
    """
    if len(a) != len(b) or _shape(a) != _shape(b):
        return None
    if not strict:
        for cs in (a, b):
            for c in cs.components:
                if len(c.graph.vertices) > cap:
                    raise SizeExceeded(
                        f"component with {len(c.graph.vertices)} vertices exceeds isomorphism cap {cap}"
                    )
    ha, hb = _encode(a, strict), _encode(b, strict)
    gm = GraphMatcher(ha, hb, node_match=_node_match)
    if not gm.is_isomorphic():
        return None
    comp_map, label_map = {}, {}
    for src, dst in gm.mapping.items():
        if src[0] == "C":
            comp_map[src[1]] = dst[1]
        elif src[0] == "L":
            label_map[src[1]] = dst[1]
    return comp_map, label_map


def are_equivalent(a: ComponentSet, b: ComponentSet, strict: bool = False, cap: int = DEFAULT_ISO_CAP) -> bool:
    """True iff ``a`` and ``b`` are equivalent component sets.

    In the default (isomorphism) mode a component with more than ``cap``
    vertices raises :class:`SizeExceeded`.
    """
    if len(a) != len(b) or _shape(a) != _shape(b):
        return False
    if strict:
        ka, kb = _strict_canonical(a), _strict_canonical(b)
        if ka is not None and kb is not None:
            return ka == kb
    return find_equivalence(a, b, strict=strict, cap=cap) is not None


def graphs_isomorphic(a: LabeledMultigraph, b: LabeledMultigraph) -> bool:
    """Multigraph isomorphism, ignoring edge ids and virtual labels."""
    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False
    ha, hb = nx.MultiGraph(), nx.MultiGraph()
    for g, h in ((a, ha), (b, hb)):
        h.add_nodes_from(g.vertices)
        h.add_edges_from((e.u, e.v) for e in g.edges)
    return nx.is_isomorphic(ha, hb)
