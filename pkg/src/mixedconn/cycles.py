"""Cycle decompositions of Eulerian multigraphs.

``c(G)`` is the least and ``nu(G)`` the largest number of cycles an Eulerian
graph can be partitioned into.  Both are computed exactly by exhaustive
search on small graphs, and can also be assembled from the 2.5-connected
components: with ``k`` components, ``c(G) = sum c(G_i) - k + 1`` and the same
for ``nu``.  :func:`hajos_check` audits the bound
``c(G) <= (|V| + m(G) - 1) / 2`` where ``m(G)`` counts surplus parallel edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import connectivity
from .coloring import components_25
from .errors import InvariantBreach, NotBiconnected, NotEulerian, SizeExceeded
from .graph import LabeledMultigraph

__all__ = [
    "EXHAUSTIVE_CAP",
    "CycleDecomposition",
    "is_eulerian",
    "multi_excess",
    "min_cycles",
    "max_cycles",
    "is_cycle_decomposition",
    "c_via_components",
    "nu_via_components",
    "hajos_bound",
    "hajos_check",
    "Audit",
    "audit",
]

EXHAUSTIVE_CAP = 16


@dataclass(frozen=True)
class CycleDecomposition:
    """A partition of the edges into cycles, each given as edge ids in walk order."""

    cycles: tuple

    @property
    def cardinality(self) -> int:
        return len(self.cycles)

    def to_json(self) -> list:
        return [list(c) for c in self.cycles]


def is_eulerian(g: LabeledMultigraph) -> bool:
    """Connected with every degree even."""
    return connectivity.is_connected(g) and all(g.degree(x) % 2 == 0 for x in g.vertices)


def multi_excess(g: LabeledMultigraph) -> int:
    """Edges to delete to make ``g`` simple."""
    return sum(k - 1 for k in g.multiplicities().values())


def _require_eulerian(g: LabeledMultigraph) -> None:
    if not is_eulerian(g):
        raise NotEulerian("graph is not Eulerian")


def _cycles_through(edges: list, adj: dict, mask: int, first: int):
    """Every cycle in ``mask`` through edge index ``first``, as index lists starting with it."""
    u, v = edges[first][1], edges[first][2]
    path = [first]
    on_path = {v}

    def extend(x):
        for i, y in adj[x]:
            if not (mask >> i) & 1 or i == first or i in path:
                continue
            if y == u:
                yield path + [i]
            elif y not in on_path:
                on_path.add(y)
                path.append(i)
                yield from extend(y)
                path.pop()
                on_path.discard(y)

    yield from extend(v)


def _extremal(g: LabeledMultigraph, cap: int, want_max: bool):
    if len(g.edges) > cap:
        raise SizeExceeded(f"{len(g.edges)} edges exceed the exhaustive cap {cap}")
    edges = sorted((e.id, e.u, e.v) for e in g.edges)
    adj = {x: [] for x in g.vertices}
    for i, (_, a, b) in enumerate(edges):
        adj[a].append((i, b))
        adj[b].append((i, a))
    memo = {0: (0, ())}

    def solve(mask):
        if mask in memo:
            return memo[mask]
        first = (mask & -mask).bit_length() - 1
        best = None
        for cyc in _cycles_through(edges, adj, mask, first):
            rest = mask
            for i in cyc:
                rest &= ~(1 << i)
            sub = solve(rest)
            if sub is None:
                continue
            cand = (sub[0] + 1, (tuple(cyc),) + sub[1])
            if best is None or (cand[0] > best[0] if want_max else cand[0] < best[0]):
                best = cand
        memo[mask] = best
        return best

    res = solve((1 << len(edges)) - 1)
    if res is None:
        raise InvariantBreach("even-degree graph without a cycle decomposition")
    count, cycles = res
    return count, CycleDecomposition(tuple(tuple(edges[i][0] for i in c) for c in cycles))


def min_cycles(g: LabeledMultigraph, cap: int = EXHAUSTIVE_CAP) -> tuple:
    """``(c(G), witness)`` by exhaustive search."""
    _require_eulerian(g)
    return _extremal(g, cap, want_max=False)


def max_cycles(g: LabeledMultigraph, cap: int = EXHAUSTIVE_CAP) -> tuple:
    """``(nu(G), witness)`` by exhaustive search."""
    _require_eulerian(g)
    return _extremal(g, cap, want_max=True)


def is_cycle_decomposition(g: LabeledMultigraph, dec: CycleDecomposition) -> bool:
    """Every edge is used once and every part is a cycle (connected, all degrees 2)."""
    used = [i for c in dec.cycles for i in c]
    if sorted(used) != sorted(g.edge_ids()):
        return False
    for c in dec.cycles:
        part = LabeledMultigraph(frozenset(x for i in c for x in g.edge(i).ends()), tuple(g.edge(i) for i in c))
        if len(c) < 2 or not connectivity.is_connected(part):
            return False
        if any(part.degree(x) != 2 for x in part.vertices):
            return False
    return True


def _composed(g: LabeledMultigraph, cap: int, want_max: bool) -> int:
    _require_eulerian(g)
    if not connectivity.is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")
    comps = components_25(g).components.components
    total = 0
    for comp in comps:
        h = comp.graph
        if not is_eulerian(h):
            raise InvariantBreach("a 2.5-connected component of an Eulerian graph is not Eulerian")
        total += _extremal(h, cap, want_max)[0]
    return total - len(comps) + 1


def c_via_components(g: LabeledMultigraph, cap: int = EXHAUSTIVE_CAP) -> int:
    """``c(G)`` assembled from exhaustive searches on the 2.5-connected components.

    Virtual edges of a component are decomposed like ordinary edges.
    """
    return _composed(g, cap, want_max=False)


def nu_via_components(g: LabeledMultigraph, cap: int = EXHAUSTIVE_CAP) -> int:
    """``nu(G)`` assembled like :func:`c_via_components`."""
    return _composed(g, cap, want_max=True)


def hajos_bound(g: LabeledMultigraph) -> Fraction:
    _require_eulerian(g)
    return Fraction(len(g.vertices) + multi_excess(g) - 1, 2)


def _blockwise(g: LabeledMultigraph, cap: int, route: str, want_max: bool) -> int:
    """Sum over blocks; every cycle lies inside one block."""
    total = 0
    for h in connectivity.biconnected_blocks(g):
        if route == "components" and len(h.vertices) > 2:
            total += _composed(h, cap, want_max)
        else:
            total += _extremal(h, cap, want_max)[0]
    return total


def hajos_check(g: LabeledMultigraph, route: str = "exhaustive", cap: int = EXHAUSTIVE_CAP) -> bool:
    """``c(G) <= hajos_bound(G)``, with ``c`` computed per block by ``route``.

    ``route`` is ``"exhaustive"`` or ``"components"``.
    """
    bound = hajos_bound(g)
    return _blockwise(g, cap, route, want_max=False) <= bound


@dataclass(frozen=True)
class Audit:
    graph_id: str
    c: int
    nu: int
    bound: Fraction
    block_composed: bool

    @property
    def verdict(self) -> str:
        return "PASS" if self.c <= self.bound else "FAIL"

    def line(self) -> str:
        tag = " blocks" if self.block_composed else ""
        return f"{self.graph_id} {self.c} {self.nu} {self.bound} {self.verdict}{tag}"


def audit(g: LabeledMultigraph, graph_id: str = "g", route: str = "exhaustive", cap: int = EXHAUSTIVE_CAP) -> Audit:
    """``c``, ``nu`` and the Hajós bound of an Eulerian graph, block by block if needed."""
    bound = hajos_bound(g)
    blocks = not connectivity.is_biconnected(g)
    c = _blockwise(g, cap, route, want_max=False)
    nu = _blockwise(g, cap, route, want_max=True)
    return Audit(graph_id, c, nu, bound, blocks)
