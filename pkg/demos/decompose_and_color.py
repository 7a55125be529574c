"""Triconnected components, the red/green coloring and the 2.5-connected components
of a few small graphs.

Run with ``python demos/decompose_and_color.py``.
"""

from mixedconn import components_25, generators as gen


def show(name, g):
    r = components_25(g)
    print(f"{name}: {len(g.vertices)} vertices, {len(g.edges)} edges")
    for i, c in enumerate(r.tricomps):
        labels = sorted(e.label for e in c.graph.virtual_edges)
        print(f"  tricomp {i}: {c.kind.value:5s} {len(c.graph.edges)} edges, virtual labels {labels}")
    colors = {lab: col.value for lab, col in sorted(r.full_coloring.items())}
    print(f"  coloring: {colors or 'no virtual edges'}")
    kinds = [c.kind.value for c in r.components]
    print(f"  2.5-components: {len(r.components)} {kinds}")
    print()


if __name__ == "__main__":
    k4 = gen.complete(4)
    # a bond between three paths: every label stays green
    show("K_{2,3}", gen.complete_bipartite(2, 3))
    # two K4 sharing an edge: the bond in between is red on both sides
    show("two K4 sharing an edge", gen.glue(k4, k4, "share-edge"))
    # one K4 hung on a subdivided edge of another: a real vertex-edge separator survives
    show("K4 attached at a subdivision", gen.glue(k4, k4, "2.5-attach"))
    show("chain of five K4", gen.k4chain(5, "edge"))
