"""Loopless labeled multigraphs, ears, and the ``.mg`` edge-list format.

A :class:`LabeledMultigraph` is an immutable value.  Edges carry stable
integer ids so that parallel edges stay distinguishable; a subset of the
edges is *virtual* and carries an injective integer label.  Every other module
speaks in edge ids.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

from .errors import (
    DuplicateEdgeId,
    DuplicateVirtualLabel,
    LoopEdge,
    ParseError,
    UnknownEdge,
    UnknownEndpoint,
)

__all__ = [
    "Edge",
    "LabeledMultigraph",
    "Ear",
    "build",
    "ear_of",
    "ears",
    "parse",
    "serialize",
    "read_mg",
    "write_mg",
]


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    label: Optional[int] = None

    @property
    def virtual(self) -> bool:
        return self.label is not None

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u

    def ends(self) -> tuple[int, int]:
        """Endpoints as a sorted pair."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True, eq=False)
class LabeledMultigraph:
    """A finite loopless multigraph with optional virtual-edge labels.

    Use :func:`build` (validating) to construct one from plain data.  The
    constructor itself trusts its input; internal code that already knows the
    invariants hold goes through it directly.
    """

    vertices: frozenset
    edges: tuple

    # -- lookups ---------------------------------------------------------

    @cached_property
    def _by_id(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def _incidence(self) -> dict:
        inc = {x: [] for x in self.vertices}
        for e in self.edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        return inc

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise UnknownEdge(f"no edge with id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def incident(self, x: int) -> list:
        return self._incidence[x]

    def degree(self, x: int) -> int:
        return len(self._incidence[x])

    def neighbors(self, x: int) -> set:
        return {e.other(x) for e in self._incidence[x]}

    def edge_ids(self) -> list:
        return [e.id for e in self.edges]

    @property
    def virtual_edges(self) -> tuple:
        return tuple(e for e in self.edges if e.label is not None)

    @property
    def labels(self) -> set:
        return {e.label for e in self.edges if e.label is not None}

    def edge_with_label(self, label: int) -> Edge:
        for e in self.edges:
            if e.label == label:
                return e
        raise UnknownEdge(f"no virtual edge labeled {label}")

    @property
    def max_edge_id(self) -> int:
        return max((e.id for e in self.edges), default=-1)

    @property
    def max_label(self) -> int:
        return max((e.label for e in self.edges if e.label is not None), default=-1)

    def multiplicities(self) -> dict:
        """Map each adjacent vertex pair (sorted) to its number of edges."""
        mult = {}
        for e in self.edges:
            k = e.ends()
            mult[k] = mult.get(k, 0) + 1
        return mult

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicities().values())

    def is_triangle(self) -> bool:
        return (
            len(self.vertices) == 3
            and len(self.edges) == 3
            and len(self.multiplicities()) == 3
        )

    # -- derived graphs --------------------------------------------------

    def remove_edges(self, eids: Iterable[int]) -> "LabeledMultigraph":
        drop = set(eids)
        return LabeledMultigraph(
            self.vertices, tuple(e for e in self.edges if e.id not in drop)
        )

    def remove_vertices(self, xs: Iterable[int]) -> "LabeledMultigraph":
        drop = set(xs)
        return LabeledMultigraph(
            self.vertices - drop,
            tuple(e for e in self.edges if e.u not in drop and e.v not in drop),
        )

    def induced(self, xs: Iterable[int]) -> "LabeledMultigraph":
        keep = frozenset(xs)
        return LabeledMultigraph(
            keep, tuple(e for e in self.edges if e.u in keep and e.v in keep)
        )

    def add_edge(self, u: int, v: int, label: Optional[int] = None):
        """Return ``(graph, new_edge_id)`` with one more edge ``uv``."""
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if u not in self.vertices or v not in self.vertices:
            raise UnknownEndpoint(f"edge ({u}, {v}) has an unknown endpoint")
        if label is not None and label in self.labels:
            raise DuplicateVirtualLabel(f"label {label} already used")
        eid = self.max_edge_id + 1
        return LabeledMultigraph(self.vertices, self.edges + (Edge(eid, u, v, label),)), eid

    def add_vertex(self, x: int) -> "LabeledMultigraph":
        return LabeledMultigraph(self.vertices | {x}, self.edges)

    def strip_labels(self) -> "LabeledMultigraph":
        """Same graph with every edge made non-virtual."""
        return LabeledMultigraph(
            self.vertices, tuple(e._replace(label=None) for e in self.edges)
        )

    def renumber_edges(self) -> "LabeledMultigraph":
        """Edge ids 0..m-1 in the order of the current ids."""
        es = sorted(self.edges, key=lambda e: e.id)
        return LabeledMultigraph(
            self.vertices, tuple(e._replace(id=i) for i, e in enumerate(es))
        )

    # -- value semantics -------------------------------------------------

    def _key(self):
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))

    def __eq__(self, other):
        if not isinstance(other, LabeledMultigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<LabeledMultigraph |V|={len(self.vertices)} |E|={len(self.edges)} |E_V|={len(self.virtual_edges)}>"


def build(vertices: Iterable[int] = (), edges: Iterable = ()) -> LabeledMultigraph:
    """Validate plain data and build a graph.

    ``edges`` holds :class:`Edge` values or tuples ``(u, v)`` / ``(u, v, label)``.
    Tuples get ids from their position in the list.  Endpoints not listed in
    ``vertices`` raise :class:`UnknownEndpoint` unless ``vertices`` is empty,
    in which case the vertex set is taken from the edges.
    """
    verts = set(vertices)
    infer = not verts
    out = []
    seen_ids = set()
    seen_labels = set()
    for i, item in enumerate(edges):
        if isinstance(item, Edge):
            e = item
        elif len(item) == 2:
            e = Edge(i, item[0], item[1])
        else:
            e = Edge(i, item[0], item[1], item[2])
        if e.u == e.v:
            raise LoopEdge(f"loop at vertex {e.u} (edge {e.id})")
        if infer:
            verts.update((e.u, e.v))
        elif e.u not in verts or e.v not in verts:
            raise UnknownEndpoint(f"edge {e.id} = ({e.u}, {e.v}) has an unknown endpoint")
        if e.id in seen_ids:
            raise DuplicateEdgeId(f"edge id {e.id} used twice")
        seen_ids.add(e.id)
        if e.label is not None:
            if e.label in seen_labels:
                raise DuplicateVirtualLabel(f"virtual label {e.label} used twice")
            seen_labels.add(e.label)
        out.append(e)
    for x in verts:
        if not isinstance(x, int) or x < 0:
            raise UnknownEndpoint(f"vertex ids must be nonnegative integers, got {x!r}")
    return LabeledMultigraph(frozenset(verts), tuple(out))


# ---------------------------------------------------------------------------
# Ears


@dataclass(frozen=True)
class Ear:
    """Maximal path (or cycle) through an edge whose inner vertices have degree 2."""

    edge_ids: tuple
    closed: bool
    trivial: bool


def _walk(g: LabeledMultigraph, x: int, via: Edge, start_id: int):
    """Follow degree-2 vertices from ``x``, leaving through the edge other than ``via``.

    Returns ``(edges, closed)``; ``closed`` is set when the walk comes back
    to the starting edge.
    """
    path = []
    while g.degree(x) == 2:
        a, b = g.incident(x)
        nxt = b if a.id == via.id else a
        if nxt.id == start_id:
            return path, True
        path.append(nxt)
        x = nxt.other(x)
        via = nxt
    return path, False


def _canonical_cycle(ids: list) -> tuple:
    i = ids.index(min(ids))
    ids = ids[i:] + ids[:i]
    if len(ids) > 2 and ids[-1] < ids[1]:
        ids = [ids[0]] + ids[:0:-1]
    return tuple(ids)


def ear_of(g: LabeledMultigraph, eid: int) -> Ear:
    """The ear of edge ``eid`` in ``g``.

    Closed ears start at their smallest edge id and run towards the smaller of
    its two cycle neighbours.  Open ears are oriented so the first id is not
    larger than the last one.
    """
    e = g.edge(eid)
    du, dv = g.degree(e.u), g.degree(e.v)
    if du >= 3 and dv >= 3:
        return Ear((eid,), False, True)
    right, closed = _walk(g, e.v, e, eid)
    if closed:
        return Ear(_canonical_cycle([eid] + [f.id for f in right]), True, False)
    left, _ = _walk(g, e.u, e, eid)
    ids = [f.id for f in reversed(left)] + [eid] + [f.id for f in right]
    if ids[0] > ids[-1]:
        ids.reverse()
    return Ear(tuple(ids), False, False)


def ears(g: LabeledMultigraph) -> list:
    """All ears of ``g``; every edge lies in exactly one of them."""
    covered = set()
    out = []
    for e in sorted(g.edges, key=lambda e: e.id):
        if e.id in covered:
            continue
        ear = ear_of(g, e.id)
        covered.update(ear.edge_ids)
        out.append(ear)
    return out


# ---------------------------------------------------------------------------
# Text format

_INT = re.compile(r"^\d+$")
_LABEL = re.compile(r"^v(\d+)$")


def parse(text: str) -> LabeledMultigraph:
    """Parse ``.mg`` text.  Edge ids follow the order of the ``e`` lines."""
    verts = set()
    edges = []
    labels = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "v":
            if len(tok) != 2 or not _INT.match(tok[1]):
                raise ParseError(f"expected 'v <id>', got {raw!r}", lineno)
            verts.add(int(tok[1]))
        elif tok[0] == "e":
            if len(tok) not in (3, 4) or not (_INT.match(tok[1]) and _INT.match(tok[2])):
                raise ParseError(f"expected 'e <u> <v> [v<label>]', got {raw!r}", lineno)
            u, v = int(tok[1]), int(tok[2])
            label = None
            if len(tok) == 4:
                m = _LABEL.match(tok[3])
                if not m:
                    raise ParseError(f"bad virtual label {tok[3]!r}", lineno)
                label = int(m.group(1))
            if u == v:
                raise ParseError(f"loop edge at vertex {u}", lineno) from LoopEdge(u)
            if label is not None:
                if label in labels:
                    raise ParseError(
                        f"virtual label {label} used twice", lineno
                    ) from DuplicateVirtualLabel(label)
                labels.add(label)
            verts.update((u, v))
            edges.append(Edge(len(edges), u, v, label))
        else:
            raise ParseError(f"unknown record type {tok[0]!r}", lineno)
    return LabeledMultigraph(frozenset(verts), tuple(edges))


def serialize(g: LabeledMultigraph) -> str:
    """Inverse of :func:`parse` up to renumbering the edge ids."""
    lines = []
    touched = set()
    for e in g.edges:
        touched.add(e.u)
        touched.add(e.v)
    for x in sorted(g.vertices - touched):
        lines.append(f"v {x}")
    for e in sorted(g.edges, key=lambda e: e.id):
        if e.label is None:
            lines.append(f"e {e.u} {e.v}")
        else:
            lines.append(f"e {e.u} {e.v} v{e.label}")
    return "\n".join(lines) + ("\n" if lines else "")


def read_mg(path) -> LabeledMultigraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_mg(g: LabeledMultigraph, path) -> None:
    from ._io import atomic_write

    atomic_write(path, serialize(g))
