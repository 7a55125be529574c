"""Reducing critical 2.5-connected graphs down to copies of K4.

Walks the worked example by hand (degenerate reduction, then a split at a
non-degenerate separator, then a Tutte step) and then lets
``reduction_chain`` pick the rules for a few named graphs.

Run with ``python demos/critical_reductions.py``.
"""

from mixedconn import generators as gen
from mixedconn.critical import (
    degenerate_roles,
    is_critical,
    is_degenerate_graph,
    is_k4,
    reduce_degenerate,
    reduce_nondegenerate,
    reduction_chain,
    tutte_step,
)
from mixedconn.equivalence import graphs_isomorphic


def by_hand():
    fig = gen.degenerate_example()
    print("8-vertex graph: critical", is_critical(fig), "degenerate", is_degenerate_graph(fig))
    print("roles at vertex 6:", degenerate_roles(fig, 6))
    mid = reduce_degenerate(fig, 6)
    print("after the degenerate step:", len(mid.vertices), "vertices,",
          "matches the middle graph:", graphs_isomorphic(mid, gen.middle_example()))
    ids = {e.ends(): e.id for e in mid.edges}
    parts = reduce_nondegenerate(mid, (5, ids[(3, 7)], ids[(1, 8)]))
    k33 = gen.complete_bipartite(3, 3)
    for h in parts:
        name = "K4" if is_k4(h) else "K33" if graphs_isomorphic(h, k33) else "?"
        print("  split part:", name)
    k4, cert = tutte_step(k33)
    print("Tutte step on K33 removes edge", cert.edge, "and gives K4:", is_k4(k4))
    print()


def chains():
    named = {
        "8-vertex degenerate": gen.degenerate_example(),
        "prism_8": gen.prism(8),
        "K_{3,4}": gen.complete_bipartite(3, 4),
        "wheel_7": gen.wheel(7),
    }
    for name, g in named.items():
        steps = reduction_chain(g)
        print(f"{name}:")
        for st in steps:
            sizes = [len(h.vertices) for h in st.outputs]
            print(f"  {st.rule:16s} g{st.input_id} -> {['g%d' % i for i in st.output_ids]} sizes {sizes}")


if __name__ == "__main__":
    by_hand()
    chains()
