"""Critical 2.5-connected graphs: testing and reduction.

A 2.5-connected graph is critical when every edge lies on a
vertex-2-edge-separator ``(c, e1, e2)``, i.e. ``G - e1 - e2 - c`` is
disconnected.  Such a separator is degenerate when some degree-3 vertex has
``e1``, ``e2`` and an edge to ``c`` as its three edges; a critical graph all
of whose separators are degenerate is called degenerate.

Three reductions shrink a critical 3-connected graph while keeping it
critical: splitting at a non-degenerate separator, deleting (and possibly
patching around) a degree-3 vertex of a degenerate graph, and undoing one
Tutte extension of a cubic graph.  :func:`reduction_chain` applies them until
only copies of ``K_4`` remain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import connectivity, oracle
from ._io import atomic_write
from .coloring import is_25_connected, is_triconnected
from .components import ComponentKind, component_tree
from .errors import (
    DegenerateSeparator,
    InvariantBreach,
    IsK4,
    NoValidEdge,
    Not3Connected,
    Not25Connected,
    NotASeparator,
    NotCritical,
    NotCubic3Connected,
    NotDegenerate,
    PatternMismatch,
    ThreeRegular,
)
from .graph import LabeledMultigraph, write_mg
from .oracle import Vertex2EdgeSeparator
from .splitmerge import triconnected_components

__all__ = [
    "is_3_connected",
    "is_k4",
    "is_degenerate_separator",
    "is_degenerate_graph",
    "is_critical_structural",
    "is_critical",
    "nondegenerate_case",
    "reduce_nondegenerate",
    "degenerate_roles",
    "reduce_degenerate",
    "TutteCertificate",
    "tutte_step",
    "tutte_extend",
    "ReductionStep",
    "reduction_chain",
    "chain_to_json",
    "write_chain",
]


def _simple_underlying(g: LabeledMultigraph) -> LabeledMultigraph:
    seen = set()
    keep = []
    for e in sorted(g.edges):
        if e.ends() not in seen:
            seen.add(e.ends())
            keep.append(e)
    return LabeledMultigraph(g.vertices, tuple(keep))


def is_3_connected(g: LabeledMultigraph) -> bool:
    """At least 4 vertices and no two vertices whose removal disconnects.

    Parallel edges are irrelevant for vertex connectivity, so this asks
    whether the underlying simple graph has a separation pair.
    """
    if len(g.vertices) < 4:
        return False
    return is_triconnected(_simple_underlying(g))


def is_k4(g: LabeledMultigraph) -> bool:
    return len(g.vertices) == 4 and len(g.edges) == 6 and g.is_simple()


def _is_cubic(g: LabeledMultigraph) -> bool:
    return all(g.degree(x) == 3 for x in g.vertices)


# ---------------------------------------------------------------------------
# Tests


def _require_separator(g: LabeledMultigraph, s) -> Vertex2EdgeSeparator:
    s = Vertex2EdgeSeparator(*s)
    if s.c not in g.vertices or not g.has_edge(s.e1) or not g.has_edge(s.e2) or s.e1 == s.e2:
        raise NotASeparator(f"{tuple(s)} does not name a vertex and two distinct edges")
    if connectivity.is_connected(g, removed_vertices=(s.c,), removed_edges=(s.e1, s.e2)):
        raise NotASeparator(f"{tuple(s)} is not a vertex-2-edge-separator")
    return s


def is_degenerate_separator(g: LabeledMultigraph, s) -> bool:
    """Some degree-3 vertex is incident to ``e1`` and ``e2`` and its third edge goes to ``c``."""
    s = _require_separator(g, s)
    e1, e2 = g.edge(s.e1), g.edge(s.e2)
    for u in set(e1.ends()) & set(e2.ends()):
        if u == s.c or g.degree(u) != 3:
            continue
        (e0,) = [e for e in g.incident(u) if e.id not in (s.e1, s.e2)]
        if e0.other(u) == s.c:
            return True
    return False


def is_critical(g: LabeledMultigraph) -> bool:
    """Brute force at desk scale, the structural test above the oracle caps."""
    if len(g.vertices) <= oracle.CAP_VERTICES and len(g.edges) <= oracle.CAP_EDGES:
        return oracle.is_critical_25_bruteforce(g)
    if not connectivity.is_biconnected(g) or not is_25_connected(g):
        return False
    return is_critical_structural(g)


def is_degenerate_graph(g: LabeledMultigraph) -> bool:
    """Every vertex-2-edge-separator of the critical graph ``g`` is degenerate."""
    if not is_critical(g):
        raise NotCritical("graph is not critical 2.5-connected")
    return all(is_degenerate_separator(g, s) for s in oracle.vertex_2edge_separators(g))


def _has_real_partner(h: LabeledMultigraph, e1: int) -> bool:
    """Some ``(c, e1, e2)`` with ``e2`` real separates ``h``."""
    real = [e.id for e in h.edges if e.label is None and e.id != e1]
    if not real:
        return False
    for c in sorted(h.vertices):
        if not connectivity.is_connected(h, removed_vertices=(c,), removed_edges=(e1,)):
            return True
        br = connectivity.bridges(h, removed_vertices=(c,), removed_edges=(e1,))
        if any(h.edge(i).label is None for i in br):
            return True
    return False


def is_critical_structural(g: LabeledMultigraph) -> bool:
    """Criticality read off the triconnected components.

    A bond holding a real edge must have exactly three edges, one of them
    virtual, and its single neighbour must be a cycle.  In every other
    component each real edge must lie on a vertex-2-edge-separator of that
    component whose two edges are both real.
    """
    if not g.vertices or not connectivity.is_biconnected(g) or not is_25_connected(g):
        raise Not25Connected("graph is not 2.5-connected")
    tri = triconnected_components(g)
    tree = component_tree(tri)
    adj = tree.adjacency()
    for i, comp in enumerate(tri.components):
        h = comp.graph
        real = [e.id for e in h.edges if e.label is None]
        if not real:
            continue
        if comp.kind is ComponentKind.BOND:
            if len(h.edges) != 3 or len(h.virtual_edges) != 1 or len(adj[i]) != 1:
                return False
            (j,) = [j for j, _ in adj[i]]
            nb = tri.components[j]
            if nb.kind is not ComponentKind.CYCLE:
                return False
            if any(e.label is None for e in nb.graph.edges):
                raise InvariantBreach("cycle next to a real bond holds a real edge in a 2.5-connected graph")
            continue
        if not all(_has_real_partner(h, e) for e in real):
            return False
    return True


# ---------------------------------------------------------------------------
# Reduction at a non-degenerate separator


def nondegenerate_case(g: LabeledMultigraph, s) -> tuple:
    """``("A", e0)`` if an edge ``e0`` at ``c`` completes a 3-edge cut with ``e1, e2``, else ``("B", None)``."""
    s = _require_separator(g, s)
    for e0 in sorted(g.incident(s.c)):
        if e0.id in (s.e1, s.e2):
            continue
        if not connectivity.is_connected(g, removed_edges=(e0.id, s.e1, s.e2)):
            return "A", e0.id
    return "B", None


def _attach(g: LabeledMultigraph, side: set, x: int, targets) -> LabeledMultigraph:
    h = g.induced(side).add_vertex(x)
    for t in targets:
        h, _ = h.add_edge(t, x)
    return h


def _end_in(g: LabeledMultigraph, eid: int, side: set) -> int:
    e = g.edge(eid)
    ends = [x for x in e.ends() if x in side]
    if len(ends) != 1:
        raise InvariantBreach(f"edge {eid} does not cross the cut")
    return ends[0]


def reduce_nondegenerate(g: LabeledMultigraph, s) -> tuple:
    """Split a 3-connected graph at a non-degenerate separator into two smaller graphs.

    The new vertices are ``max(V) + 1`` in the first graph and ``max(V) + 2``
    in the second; the first graph is built on the side holding the smallest
    vertex.
    """
    s = _require_separator(g, s)
    if not is_3_connected(g):
        raise Not3Connected("graph is not 3-connected")
    if is_degenerate_separator(g, s):
        raise DegenerateSeparator(f"{tuple(s)} is degenerate")
    case, e0 = nondegenerate_case(g, s)
    top = max(g.vertices)
    out = []
    if case == "A":
        sides = connectivity.components(g, removed_edges=(e0, s.e1, s.e2))
        if len(sides) != 2:
            raise InvariantBreach(f"3-edge cut leaves {len(sides)} pieces")
        for k, side in enumerate(sides, 1):
            ends = [_end_in(g, i, side) for i in (e0, s.e1, s.e2)]
            out.append(_attach(g, side, top + k, ends))
    else:
        sides = connectivity.components(g, removed_vertices=(s.c,), removed_edges=(s.e1, s.e2))
        if len(sides) != 2:
            raise InvariantBreach(f"separator leaves {len(sides)} pieces")
        for k, side in enumerate(sides, 1):
            ends = [_end_in(g, i, side) for i in (s.e1, s.e2)] + [s.c]
            out.append(_attach(g, side | {s.c}, top + k, ends))
    return tuple(out)


# ---------------------------------------------------------------------------
# Reduction of degenerate graphs


def degenerate_roles(g: LabeledMultigraph, u: int) -> Optional[tuple]:
    """``(case, v1, v2, v3)`` for a degree-3 vertex ``u``, or ``None`` if no case applies.

    Case ``"A"``: all neighbours have degree at least 4.  Case ``"B"``:
    ``v1`` is the smallest degree-3 neighbour, ``v3`` the smallest neighbour
    of degree at least 4 and ``v2`` the remaining one.
    """
    if g.degree(u) != 3:
        return None
    nbrs = sorted(g.neighbors(u))
    if len(nbrs) != 3:
        return None
    low = [v for v in nbrs if g.degree(v) == 3]
    high = [v for v in nbrs if g.degree(v) >= 4]
    if len(high) == 3:
        return ("A", *nbrs)
    if low and high:
        v1, v3 = low[0], high[0]
        (v2,) = [v for v in nbrs if v not in (v1, v3)]
        return ("B", v1, v2, v3)
    return None


def reduce_degenerate(g: LabeledMultigraph, u: Optional[int] = None) -> LabeledMultigraph:
    """``G - u`` (case A) or ``G - u + v1v2`` (case B) for a degenerate, non-cubic graph.

    With ``u=None`` the smallest vertex for which a case applies is used.
    """
    if not is_3_connected(g):
        raise Not3Connected("graph is not 3-connected")
    if not is_degenerate_graph(g):
        raise NotDegenerate("graph has a non-degenerate separator")
    if _is_cubic(g):
        raise ThreeRegular("graph is 3-regular")
    if u is None:
        u = next((x for x in sorted(g.vertices) if degenerate_roles(g, x)), None)
        if u is None:
            raise ThreeRegular("no degree-3 vertex matches either case")
    roles = degenerate_roles(g, u)
    if roles is None:
        raise PatternMismatch(f"vertex {u} matches neither case")
    case, v1, v2, _ = roles
    h = g.remove_vertices([u])
    if case == "B":
        h, _ = h.add_edge(v1, v2)
    return h


# ---------------------------------------------------------------------------
# Tutte steps


@dataclass(frozen=True)
class TutteCertificate:
    """The edge ``x y`` removed from the input and the two edges of ``H`` that replaced its ends."""

    edge: int
    ends: tuple
    e: int
    f: int


def _require_cubic_3connected(g: LabeledMultigraph) -> None:
    if not g.is_simple() or not _is_cubic(g) or not is_3_connected(g):
        raise NotCubic3Connected("graph is not a simple cubic 3-connected graph")


def _suppress(g: LabeledMultigraph, eid: int):
    e = g.edge(eid)
    x, y = e.u, e.v
    a, b = sorted(g.neighbors(x) - {y})
    c, d = sorted(g.neighbors(y) - {x})
    h = g.remove_vertices([x, y])
    h, ne = h.add_edge(a, b)
    h, nf = h.add_edge(c, d)
    return h, TutteCertificate(eid, (x, y), ne, nf)


def tutte_step(g: LabeledMultigraph, edge: Optional[int] = None) -> tuple:
    """Remove an edge, suppress its two ends and return ``(H, certificate)``.

    Edges are tried in id order (only ``edge`` if given); the first one for
    which ``H`` is again simple, cubic and 3-connected wins.
    """
    if is_k4(g):
        raise IsK4("K_4 is the base case")
    _require_cubic_3connected(g)
    candidates = [edge] if edge is not None else sorted(g.edge_ids())
    for eid in candidates:
        h, cert = _suppress(g, eid)
        if h.is_simple() and _is_cubic(h) and oracle.is_3_connected(h):
            return h, cert
    raise NoValidEdge("no edge yields a cubic 3-connected graph")


def tutte_extend(h: LabeledMultigraph, e: int, f: int) -> LabeledMultigraph:
    """Subdivide the distinct edges ``e`` and ``f`` of ``h`` and join the two new vertices.

    The joining edge gets the largest edge id.
    """
    _require_cubic_3connected(h)
    if e == f or not h.has_edge(e) or not h.has_edge(f):
        raise NotCubic3Connected("e and f must be two distinct edges of H")
    ee, ff = h.edge(e), h.edge(f)
    s, t = max(h.vertices) + 1, max(h.vertices) + 2
    g = h.remove_edges([e, f]).add_vertex(s).add_vertex(t)
    for a, b in ((s, ee.u), (s, ee.v), (t, ff.u), (t, ff.v), (s, t)):
        g, _ = g.add_edge(a, b)
    return g


# ---------------------------------------------------------------------------
# Chains


@dataclass(frozen=True)
class ReductionStep:
    """One reduction: ``rule`` applied to graph ``input_id`` producing ``output_ids``.

    ``detail`` holds the separator, vertex or edge the rule was applied at.
    """

    rule: str
    input_id: int
    output_ids: tuple
    detail: dict = field(default_factory=dict)
    input: Optional[LabeledMultigraph] = field(default=None, compare=False, repr=False)
    outputs: tuple = field(default=(), compare=False, repr=False)


def _first_nondegenerate(g: LabeledMultigraph):
    for s in oracle.vertex_2edge_separators(g):
        if not is_degenerate_separator(g, s):
            return s
    return None


def reduction_chain(g: LabeledMultigraph) -> list:
    """Reduce a critical 3-connected graph until only copies of ``K_4`` remain.

    Policy per graph: split at the first non-degenerate separator if one
    exists, else reduce a degenerate non-cubic graph, else take a Tutte step.
    Graph ids number the input 0 and every output in order of creation; each
    output is re-checked for criticality, 3-connectivity and smaller order.
    """
    if not is_3_connected(g):
        raise Not3Connected("graph is not 3-connected")
    if not is_critical(g):
        raise NotCritical("graph is not critical 2.5-connected")
    graphs = [g]
    queue = [0]
    steps = []
    while queue:
        gid = queue.pop(0)
        h = graphs[gid]
        if is_k4(h):
            continue
        s = _first_nondegenerate(h)
        if s is not None:
            case, e0 = nondegenerate_case(h, s)
            outs = reduce_nondegenerate(h, s)
            rule = f"NonDegenerate_{case}"
            detail = {"separator": list(s)}
            if e0 is not None:
                detail["e0"] = e0
        elif not _is_cubic(h):
            u = next(x for x in sorted(h.vertices) if degenerate_roles(h, x))
            rule = f"Degenerate_{degenerate_roles(h, u)[0]}"
            outs = (reduce_degenerate(h, u),)
            detail = {"vertex": u}
        else:
            out, cert = tutte_step(h)
            rule = "TutteStep"
            outs = (out,)
            detail = {"edge": cert.edge, "ends": list(cert.ends), "new_edges": [cert.e, cert.f]}
        ids = []
        for out in outs:
            if len(out.vertices) >= len(h.vertices):
                raise InvariantBreach(f"{rule} did not shrink graph {gid}")
            if not is_3_connected(out) or not is_critical(out):
                raise InvariantBreach(f"{rule} on graph {gid} lost criticality or 3-connectivity")
            graphs.append(out)
            ids.append(len(graphs) - 1)
            queue.append(len(graphs) - 1)
        steps.append(ReductionStep(rule, gid, tuple(ids), detail, h, tuple(outs)))
    return steps


def chain_to_json(steps: list) -> str:
    rows = [
        {"rule": st.rule, "input": st.input_id, "outputs": list(st.output_ids), **st.detail}
        for st in steps
    ]
    return json.dumps(rows, indent=2) + "\n"


def write_chain(g: LabeledMultigraph, steps: list, out_dir) -> list:
    """Write ``chain.json`` and ``g<id>.mg`` for every graph of the chain; return the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    graphs = {0: g}
    for st in steps:
        graphs.update(zip(st.output_ids, st.outputs))
    paths = []
    for gid, h in sorted(graphs.items()):
        p = out / f"g{gid}.mg"
        write_mg(h, p)
        paths.append(p)
    p = out / "chain.json"
    atomic_write(p, chain_to_json(steps))
    paths.append(p)
    return paths
