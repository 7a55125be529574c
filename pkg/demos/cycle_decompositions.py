"""Extremal cycle decompositions of Eulerian graphs and the Hajos bound.

Compares exhaustive search against the composition over 2.5-connected
components and audits the bound on a seeded corpus.

Run with ``python demos/cycle_decompositions.py``.
"""

from mixedconn import generators as gen
from mixedconn.cycles import audit, c_via_components, max_cycles, min_cycles, nu_via_components


def main():
    k5 = gen.complete(5)
    c, w = min_cycles(k5)
    nu, wmax = max_cycles(k5)
    print(f"K5: c={c} {w.to_json()}")
    print(f"    nu={nu} {wmax.to_json()}")

    glued = gen.glue(gen.cycle(4), gen.complete(5), "2.5-attach")
    print(f"C4 attached to K5: exhaustive c={min_cycles(glued)[0]}, via components c={c_via_components(glued)}")
    print(f"                   exhaustive nu={max_cycles(glued)[0]}, via components nu={nu_via_components(glued)}")

    print("\ngraph c nu bound verdict")
    worst = None
    for i, g in enumerate(gen.eulerian_corpus(100, seed=0)):
        a = audit(g, f"eulerian[{i}]")
        slack = a.bound - a.c
        if worst is None or slack < worst[0]:
            worst = (slack, a)
        if i < 5:
            print(a.line())
    print("...")
    print("tightest:", worst[1].line())


if __name__ == "__main__":
    main()
