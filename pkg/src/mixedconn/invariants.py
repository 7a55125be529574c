"""Runtime checks of the structural facts the decomposition relies on.

Each check raises :class:`~mixedconn.errors.InvariantBreach` with a short
explanation when the fact fails on the given input; otherwise it returns
the number of individual facts it verified, which makes "checked nothing"
visible in tests.
"""

from __future__ import annotations

from typing import Optional

from . import connectivity, oracle
from .components import ComponentKind, ComponentSet
from .errors import InvariantBreach
from .graph import Edge, LabeledMultigraph, ear_of

__all__ = [
    "check_separator_sides",
    "check_separator_lifting",
    "check_no_degree2_pairs",
    "check_split_run_ears",
    "check_component_ears",
    "check_decomposition",
]


def check_separator_sides(g: LabeledMultigraph) -> int:
    """Every vertex-edge-separator ``(c, uv)`` leaves exactly two pieces, one per endpoint,
    and ``G_a + ca`` is biconnected for both endpoints ``a``.
    """
    count = 0
    for s in oracle.vertex_edge_separators(g):
        e = g.edge(s.e)
        sides = oracle.separator_sides(g, s)
        if len(sides) != 2:
            raise InvariantBreach(f"separator {tuple(s)} leaves {len(sides)} pieces")
        for side in sides:
            if len(side & {e.u, e.v}) != 1:
                raise InvariantBreach(f"separator {tuple(s)}: a piece holds {len(side & {e.u, e.v})} endpoints")
        for a in (e.u, e.v):
            ga = oracle.side_graph(g, s, a)
            plus, _ = ga.add_edge(s.c, a)
            if not oracle.is_biconnected(plus):
                raise InvariantBreach(f"separator {tuple(s)}: G_a + ca is not biconnected for a={a}")
        count += 1
    return count


def check_separator_lifting(graph: LabeledMultigraph, g1: LabeledMultigraph, g2: Optional[LabeledMultigraph] = None) -> int:
    """A separator ``(c, e)`` of a split graph with ``e`` an edge of the split
    graph's parent is also a separator of the parent.
    """
    count = 0
    parent_ids = set(graph.edge_ids())
    for part in (g1, g2):
        if part is None or part.is_triangle() or not connectivity.is_biconnected(part):
            continue
        for s in oracle.vertex_edge_separators(part, 10**9, 10**9):
            if s.e not in parent_ids:
                continue
            if graph.is_triangle() or connectivity.is_connected(
                graph, removed_vertices=(s.c,), removed_edges=(s.e,)
            ):
                raise InvariantBreach(f"separator {tuple(s)} of a split graph does not separate its parent")
            count += 1
    return count


def check_no_degree2_pairs(steps: list) -> int:
    """No split of a run that ends in the triconnected components uses a degree-2 vertex."""
    for st in steps:
        for x in st.pair:
            if st.graph.degree(x) == 2:
                raise InvariantBreach(f"split at {st.pair} uses vertex {x} of degree 2")
    return len(steps)


def _ear_trivial(g: LabeledMultigraph, e: Edge) -> bool:
    return ear_of(g, e.id).trivial


def check_split_run_ears(g: LabeledMultigraph, steps: list) -> int:
    """After every split, of two corresponding virtual edges at most one lies on a non-trivial ear."""
    work = [g]
    count = 0
    for st in steps:
        k = next((i for i, h in enumerate(work) if h is st.graph or h == st.graph), None)
        if k is None:
            raise InvariantBreach("split step refers to a graph not in the working set")
        work[k : k + 1] = [st.g1, st.g2]
        occ = {}
        for h in work:
            for e in h.virtual_edges:
                occ.setdefault(e.label, []).append((h, e))
        for lab, pair in occ.items():
            if len(pair) != 2:
                continue
            (h1, e1), (h2, e2) = pair
            if not _ear_trivial(h1, e1) and not _ear_trivial(h2, e2):
                raise InvariantBreach(f"label {lab}: both corresponding edges lie on non-trivial ears")
            count += 1
    return count


def check_component_ears(tri: ComponentSet) -> int:
    """In the triconnected components, a virtual edge on a non-trivial ear sits in a
    cycle and its partner's ear is trivial.
    """
    count = 0
    for lab, occ in tri.pairing.items():
        if len(occ) != 2:
            continue
        for (i, eid), (j, fid) in (occ, occ[::-1]):
            hi, hj = tri.components[i], tri.components[j]
            if ear_of(hi.graph, eid).trivial:
                continue
            if hi.kind is not ComponentKind.CYCLE:
                raise InvariantBreach(f"label {lab}: non-trivial ear outside a cycle component")
            if not ear_of(hj.graph, fid).trivial:
                raise InvariantBreach(f"label {lab}: partner of a non-trivial ear is non-trivial")
        count += 1
    return count


def check_decomposition(g: LabeledMultigraph, tri: ComponentSet, seeds=(None,), with_oracle: bool = True) -> int:
    """Run every check on ``g`` and on direct split runs towards ``tri``.

    ``with_oracle`` adds the brute-force separator checks on ``g``; they are
    skipped automatically above the oracle size caps.
    """
    from .splitmerge import direct_split_sequence

    total = check_component_ears(tri)
    small = len(g.vertices) <= oracle.CAP_VERTICES and len(g.edges) <= oracle.CAP_EDGES
    if with_oracle and small:
        total += check_separator_sides(g)
    for seed in seeds:
        steps = direct_split_sequence(tri, seed)
        total += check_no_degree2_pairs(steps)
        total += check_split_run_ears(g, steps)
        if with_oracle and small:
            for st in steps:
                total += check_separator_lifting(st.graph, st.g1, st.g2)
    return total
