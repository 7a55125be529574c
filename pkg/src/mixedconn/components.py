"""Component sets, their component tree, and JSON / DOT rendering.

A :class:`ComponentSet` is a collection of labeled multigraphs whose virtual
labels pair them up: every label of a complete decomposition occurs on
exactly two edges, in two different components.  Those two edges
*correspond*; gluing along them (a merge) undoes the split that made them.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import PairingBroken
from .graph import Edge, LabeledMultigraph

__all__ = [
    "ComponentKind",
    "Component",
    "ComponentSet",
    "ComponentTree",
    "classify",
    "component_tree",
    "merge_all",
    "label_signatures",
    "to_json",
    "to_dot",
]


class ComponentKind(enum.Enum):
    CYCLE = "cycle"
    BOND = "bond"
    RIGID = "rigid"


def classify(g: LabeledMultigraph) -> ComponentKind:
    """Kind of a component by shape: 2 vertices is a bond, all degrees 2 a cycle."""
    if len(g.vertices) <= 2:
        return ComponentKind.BOND
    if len(g.edges) == len(g.vertices) and all(g.degree(x) == 2 for x in g.vertices):
        return ComponentKind.CYCLE
    return ComponentKind.RIGID


@dataclass(frozen=True)
class Component:
    graph: LabeledMultigraph
    kind: ComponentKind

    @property
    def real_edges(self) -> list:
        return [e for e in self.graph.edges if e.label is None]

    @property
    def virtual_edges(self) -> tuple:
        return self.graph.virtual_edges


@dataclass(frozen=True, eq=False)
class ComponentSet:
    components: tuple

    @classmethod
    def of(cls, graphs, kinds=None) -> "ComponentSet":
        graphs = list(graphs)
        if kinds is None:
            kinds = [classify(g) for g in graphs]
        return cls(tuple(Component(g, k) for g, k in zip(graphs, kinds)))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i) -> Component:
        return self.components[i]

    @property
    def graphs(self) -> list:
        return [c.graph for c in self.components]

    @cached_property
    def pairing(self) -> dict:
        """Map label -> list of ``(component index, edge id)`` occurrences."""
        occ = {}
        for i, c in enumerate(self.components):
            for e in c.graph.edges:
                if e.label is not None:
                    occ.setdefault(e.label, []).append((i, e.id))
        return occ

    @property
    def labels(self) -> list:
        return sorted(self.pairing)

    def partner(self, label: int, index: int):
        """The occurrence of ``label`` that is not in component ``index``."""
        for occ in self.pairing[label]:
            if occ[0] != index:
                return occ
        raise PairingBroken(f"label {label} has no partner outside component {index}")

    def kinds(self) -> list:
        return [c.kind for c in self.components]

    def real_edge_ids(self) -> list:
        return sorted(e.id for c in self.components for e in c.graph.edges if e.label is None)

    def canonical_order(self) -> "ComponentSet":
        """Components sorted by (kind, vertex count, smallest real edge id)."""
        order = {ComponentKind.CYCLE: 0, ComponentKind.BOND: 1, ComponentKind.RIGID: 2}

        def key(c):
            real = [e.id for e in c.graph.edges if e.label is None]
            return (
                order[c.kind],
                len(c.graph.vertices),
                min(real) if real else float("inf"),
                min(e.id for e in c.graph.edges),
            )

        return ComponentSet(tuple(sorted(self.components, key=key)))

    def __repr__(self):
        counts = {}
        for c in self.components:
            counts[c.kind.value] = counts.get(c.kind.value, 0) + 1
        return f"<ComponentSet {len(self.components)} components {counts}>"


@dataclass(frozen=True)
class ComponentTree:
    """Nodes are component indices; edges are ``(i, j, label)`` with ``i < j``."""

    num_nodes: int
    edges: tuple = field(default=())

    def adjacency(self) -> list:
        adj = [[] for _ in range(self.num_nodes)]
        for i, j, lab in self.edges:
            adj[i].append((j, lab))
            adj[j].append((i, lab))
        return adj

    def neighbors(self, i: int) -> list:
        return [j for j, _ in self.adjacency()[i]]


def component_tree(cs: ComponentSet) -> ComponentTree:
    """The tree joining components that share a corresponding virtual label.

    Raises :class:`PairingBroken` if some label does not occur exactly twice in
    two distinct components, or if the result is not a tree.
    """
    edges = []
    for lab, occ in sorted(cs.pairing.items()):
        if len(occ) != 2 or occ[0][0] == occ[1][0]:
            raise PairingBroken(f"label {lab} occurs {len(occ)} time(s) or twice in one component")
        i, j = sorted((occ[0][0], occ[1][0]))
        edges.append((i, j, lab))
    n = len(cs.components)
    if n and len(edges) != n - 1:
        raise PairingBroken(f"{n} components but {len(edges)} labels: not a tree")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, lab in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            raise PairingBroken(f"label {lab} closes a cycle in the component graph")
        parent[ri] = rj
    return ComponentTree(n, tuple(edges))


def merge_all(cs: ComponentSet) -> LabeledMultigraph:
    """Glue every pair of corresponding virtual edges; no virtual edge survives."""
    component_tree(cs)
    verts = set()
    edges = []
    for c in cs.components:
        verts.update(c.graph.vertices)
        edges.extend(e for e in c.graph.edges if e.label is None)
    edges.sort(key=lambda e: e.id)
    return LabeledMultigraph(frozenset(verts), tuple(edges))


def label_signatures(cs: ComponentSet) -> dict:
    """A name for each label that does not depend on how labels were chosen.

    For a decomposition of a host graph, cutting the tree edge of a label
    splits the real (host) edges in two; the signature is the endpoint pair
    together with the side that does not contain the smallest real edge id.
    Two decompositions of the same host can be compared label-by-label
    through these signatures.
    """
    tree = component_tree(cs)
    adj = tree.adjacency()
    real = [frozenset(e.id for e in c.graph.edges if e.label is None) for c in cs.components]
    everything = frozenset().union(*real) if real else frozenset()
    anchor = min(everything) if everything else None
    # root at 0, collect real edges of every subtree
    n = tree.num_nodes
    order = []
    parent = [-1] * n
    plabel = [None] * n
    seen = [False] * n
    if n:
        stack = [0]
        seen[0] = True
        while stack:
            x = stack.pop()
            order.append(x)
            for y, lab in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    plabel[y] = lab
                    stack.append(y)
    below = [set(r) for r in real]
    for x in reversed(order):
        if parent[x] >= 0:
            below[parent[x]] |= below[x]
    sig = {}
    for x in order:
        lab = plabel[x]
        if lab is None:
            continue
        side = frozenset(below[x])
        if anchor in side:
            side = everything - side
        e = cs.components[x].graph.edge_with_label(lab)
        sig[lab] = (e.ends(), tuple(sorted(side)))
    return sig


# ---------------------------------------------------------------------------
# Rendering


def to_dict(cs: ComponentSet, coloring=None, tree: ComponentTree | None = None) -> dict:
    """ComponentSet as the JSON-ready dict (see :func:`to_json`)."""
    coloring = coloring or {}
    comps = []
    for idx, c in enumerate(cs.components):
        edges = []
        for e in sorted(c.graph.edges, key=lambda e: e.id):
            col = None
            if e.label is not None and e.label in coloring:
                col = coloring[e.label].value
            edges.append({"u": e.u, "v": e.v, "virtual_label": e.label, "color": col})
        comps.append(
            {
                "id": idx,
                "kind": c.kind.value,
                "vertices": sorted(c.graph.vertices),
                "edges": edges,
            }
        )
    if tree is None:
        tree = component_tree(cs)
    return {"components": comps, "tree": [list(t) for t in tree.edges]}


def to_json(cs: ComponentSet, coloring=None, tree: ComponentTree | None = None) -> str:
    """Serialize as ``{"components": [...], "tree": [[i, j, label], ...]}``.

    ``coloring`` maps labels to :class:`~mixedconn.coloring.Color`; edges
    without a color (all non-virtual ones) get ``null``.
    """
    return json.dumps(to_dict(cs, coloring, tree), sort_keys=False)


def from_dict(data: dict) -> ComponentSet:
    """Read back the dict produced by :func:`to_dict`.  Edge ids are renumbered."""
    graphs, kinds = [], []
    next_id = 0
    for comp in data["components"]:
        es = []
        for ed in comp["edges"]:
            es.append(Edge(next_id, ed["u"], ed["v"], ed["virtual_label"]))
            next_id += 1
        graphs.append(LabeledMultigraph(frozenset(comp["vertices"]), tuple(es)))
        kinds.append(ComponentKind(comp["kind"]))
    return ComponentSet.of(graphs, kinds)


def to_dot(cs: ComponentSet, coloring=None, name: str = "components") -> str:
    """Graphviz rendering: one cluster per component, virtual edges dashed."""
    coloring = coloring or {}
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for idx, c in enumerate(cs.components):
        lines.append(f"  subgraph cluster_{idx} {{")
        lines.append(f'    label="{idx}: {c.kind.value}";')
        for x in sorted(c.graph.vertices):
            lines.append(f'    c{idx}_{x} [label="{x}"];')
        for e in sorted(c.graph.edges, key=lambda e: e.id):
            attrs = []
            if e.label is not None:
                attrs.append("style=dashed")
                attrs.append(f'label="v{e.label}"')
                if e.label in coloring:
                    attrs.append(f"color={coloring[e.label].value}")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"    c{idx}_{e.u} -- c{idx}_{e.v}{suffix};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
