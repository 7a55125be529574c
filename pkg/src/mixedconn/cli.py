"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation
(for example a non-biconnected input), 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import connectivity, critical, cycles, generators, invariants, oracle
from ._io import atomic_write
from .coloring import components_25, is_25_connected, is_triconnected
from .components import to_dict, to_dot
from .equivalence import are_equivalent
from .errors import GraphError, InvariantBreach, NotBiconnected, ParseError
from .graph import read_mg, write_mg
from .splitmerge import triconnected_components

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0), help="seed for every random choice")
    p.add_argument("--cap-vertices", type=int, default=d(None), help="vertex cap of the brute-force checks")
    p.add_argument("--cap-edges", type=int, default=d(None), help="edge cap of the brute-force and exhaustive searches")
    p.add_argument("--format", choices=("json", "dot", "mg"), default=d(None), help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mixedconn", description="Triconnected and 2.5-connected components of multigraphs.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    for name, helptext in (
        ("tricomp", "triconnected components"),
        ("comp25", "2.5-connected components with the red/green coloring"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input")
        p.add_argument("output")
        p.add_argument("--blocks", action="store_true", help="decompose every biconnected block")
        p.add_argument("--check-uniqueness", type=int, default=0, metavar="N",
                       help="compare against N seeded split-engine runs")
        p.add_argument("--verify", action="store_true", help="run the structural invariant checks")
        if name == "comp25":
            p.add_argument("--color-only", action="store_true",
                           help="write the colored triconnected components instead")

    p = sub.add_parser("check", parents=[common], help="connectivity report")
    p.add_argument("input")
    p.add_argument("--critical", action="store_true", help="also report 3-connectivity and degeneracy")
    p.add_argument("--oracle", action="store_true", help="use the brute-force definitions")

    p = sub.add_parser("reduce", parents=[common], help="reduce a critical 2.5-connected graph")
    p.add_argument("input")
    p.add_argument("output_dir")

    p = sub.add_parser("cycles", parents=[common], help="extremal cycle decompositions")
    p.add_argument("input")
    p.add_argument("--hajos", action="store_true", help="audit the Hajos bound")
    p.add_argument("--witness", action="store_true", help="print witness decompositions")
    p.add_argument("--route", choices=("exhaustive", "components"), default="exhaustive")

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("args", nargs="+", help="family parameters followed by the output path")

    p = sub.add_parser("corpus", parents=[common], help="summarize every .mg file of a directory")
    p.add_argument("directory")
    p.add_argument("output")
    p.add_argument("--jobs", type=int, default=1)
    return parser


# ---------------------------------------------------------------------------
# Helpers


def _caps(args) -> tuple:
    return (
        args.cap_vertices if args.cap_vertices is not None else oracle.CAP_VERTICES,
        args.cap_edges if args.cap_edges is not None else oracle.CAP_EDGES,
    )


def _blocks_or_whole(g, use_blocks: bool) -> list:
    """The blocks of ``g``; a biconnected ``g`` is returned as itself."""
    if not g.vertices:
        raise NotBiconnected("empty graph")
    if use_blocks:
        blocks = connectivity.biconnected_blocks(g)
        return [g] if len(blocks) == 1 else blocks
    if not connectivity.is_biconnected(g):
        raise NotBiconnected("graph is not biconnected (use --blocks to decompose each block)")
    return [g]


def _uniqueness(g, reference, n: int, seed: int) -> None:
    for k in range(n):
        other = triconnected_components(g, engine="split", policy=seed + k)
        if not are_equivalent(reference, other, strict=True):
            raise InvariantBreach(f"split run with seed {seed + k} is not equivalent")
    if n:
        print(f"uniqueness: {n}/{n} runs equivalent")


def _write_components(out: Path, fmt: str, parts: list, whole: bool) -> None:
    """``parts`` is a list of (component set, coloring, tree) per block."""
    if fmt == "dot":
        text = "".join(to_dot(cs, col, name=f"block{i}") for i, (cs, col, _) in enumerate(parts))
        atomic_write(out, text)
    elif fmt == "mg":
        for b, (cs, _, _) in enumerate(parts):
            for i, c in enumerate(cs.components):
                tag = f"{i}" if whole else f"b{b}_{i}"
                write_mg(c.graph, out.with_name(f"{out.stem}_{tag}.mg"))
    else:
        if whole:
            cs, col, tree = parts[0]
            data = to_dict(cs, col, tree)
        else:
            data = {"blocks": [dict(block=b, **to_dict(cs, col, tree)) for b, (cs, col, tree) in enumerate(parts)]}
        atomic_write(out, json.dumps(data) + "\n")


# ---------------------------------------------------------------------------
# Commands


def cmd_tricomp(args) -> int:
    g = read_mg(args.input)
    blocks = _blocks_or_whole(g, args.blocks)
    parts = []
    for h in blocks:
        tri = triconnected_components(h, assume_biconnected=True)
        _uniqueness(h, tri, args.check_uniqueness, args.seed)
        if args.verify:
            invariants.check_decomposition(h, tri, seeds=(None, args.seed))
        parts.append((tri, None, None))
    _write_components(Path(args.output), args.format or "json", parts, len(blocks) == 1 and blocks[0] is g)
    return 0


def cmd_comp25(args) -> int:
    g = read_mg(args.input)
    blocks = _blocks_or_whole(g, args.blocks)
    parts, sidecar = [], []
    for h in blocks:
        res = components_25(h, assume_biconnected=True)
        _uniqueness(h, res.tricomps, args.check_uniqueness, args.seed)
        if args.verify:
            invariants.check_decomposition(h, res.tricomps, seeds=(None, args.seed))
        if args.color_only:
            parts.append((res.tricomps, res.full_coloring, res.tri_tree))
        else:
            parts.append((res.components, res.coloring, res.tree))
            sidecar.append((res.tricomps, res.full_coloring, res.tri_tree))
    whole = len(blocks) == 1 and blocks[0] is g
    out = Path(args.output)
    fmt = args.format or "json"
    _write_components(out, fmt, parts, whole)
    if sidecar and fmt == "json":
        _write_components(out.with_name(out.stem + ".tricomp.json"), "json", sidecar, whole)
    return 0


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_check(args) -> int:
    g = read_mg(args.input)
    cv, ce = _caps(args)
    if args.oracle:
        bic = oracle.is_biconnected(g) and bool(g.vertices)
        c25 = bic and oracle.is_25_connected_bruteforce(g, cv, ce)
        tri = bic and oracle.is_triconnected_bruteforce(g, cv, ce)
        crit = bic and oracle.is_critical_25_bruteforce(g, cv, ce)
    else:
        bic = bool(g.vertices) and connectivity.is_biconnected(g)
        c25 = bic and is_25_connected(g)
        tri = bic and is_triconnected(g)
        crit = c25 and critical.is_critical_structural(g)
    print(f"biconnected: {_yn(bic)}")
    print(f"25-connected: {_yn(c25)}")
    print(f"triconnected: {_yn(tri)}")
    print(f"critical: {_yn(crit)}")
    if args.critical:
        print(f"3-connected: {_yn(critical.is_3_connected(g))}")
        if crit:
            print(f"degenerate: {_yn(critical.is_degenerate_graph(g))}")
    return 0


def cmd_reduce(args) -> int:
    g = read_mg(args.input)
    steps = critical.reduction_chain(g)
    critical.write_chain(g, steps, args.output_dir)
    if not steps:
        print("base case")
    for st in steps:
        outs = ",".join(f"g{i}" for i in st.output_ids)
        print(f"{st.rule} g{st.input_id} -> {outs}")
    return 0


def cmd_cycles(args) -> int:
    g = read_mg(args.input)
    cap = args.cap_edges if args.cap_edges is not None else cycles.EXHAUSTIVE_CAP
    if not cycles.is_eulerian(g):
        raise cycles.NotEulerian("graph is not Eulerian")
    res = cycles.audit(g, Path(args.input).stem, route=args.route, cap=cap)
    note = " (block-composed)" if res.block_composed else ""
    print(f"c={res.c} nu={res.nu}{note}")
    if args.hajos:
        print(f"bound={res.bound} verdict={res.verdict}")
        if res.verdict != "PASS":
            print(f"HAJOS BOUND VIOLATED: {res.line()}", file=sys.stderr)
    if args.witness:
        if res.block_composed:
            raise NotBiconnected("witnesses are only produced for biconnected inputs")
        _, wmin = cycles.min_cycles(g, cap)
        _, wmax = cycles.max_cycles(g, cap)
        print(json.dumps({"min": wmin.to_json(), "max": wmax.to_json()}))
    return 0


def _int_args(vals, k):
    if len(vals) != k:
        raise _UsageError(f"expected {k} parameter(s), got {len(vals)}")
    try:
        return [int(v) for v in vals]
    except ValueError:
        raise _UsageError(f"parameters must be integers: {vals}") from None


def _gen_glue(vals, seed):
    if len(vals) != 3:
        raise _UsageError("glue takes MODE A.mg B.mg")
    return generators.glue(read_mg(vals[1]), read_mg(vals[2]), vals[0])


def _gen_k4chain(vals, seed):
    if len(vals) not in (1, 2):
        raise _UsageError("k4chain takes N [edge|vertex]")
    return generators.k4chain(_int_args(vals[:1], 1)[0], *vals[1:])


_FAMILIES = {
    "cycle": lambda v, s: generators.cycle(*_int_args(v, 1)),
    "bond": lambda v, s: generators.bond(*_int_args(v, 1)),
    "complete": lambda v, s: generators.complete(*_int_args(v, 1)),
    "complete_bipartite": lambda v, s: generators.complete_bipartite(*_int_args(v, 2)),
    "prism": lambda v, s: generators.prism(*_int_args(v, 1)),
    "wheel": lambda v, s: generators.wheel(*_int_args(v, 1)),
    "random_biconnected": lambda v, s: generators.random_biconnected(*_int_args(v, 2), seed=s),
    "random_eulerian": lambda v, s: generators.random_eulerian_biconnected(s, *_int_args(v, 2)),
    "glue": _gen_glue,
    "k4chain": _gen_k4chain,
}


def cmd_gen(args) -> int:
    *params, out = args.args
    if (args.format or "mg") != "mg":
        raise _UsageError("gen writes .mg only")
    g = _FAMILIES[args.family](params, args.seed)
    write_mg(g, out)
    return 0


_TSV_HEADER = "file\tvertices\tedges\tbiconnected\t25-connected\ttriconnected\ttricomps\tcomp25\tcritical\tstatus"


def _corpus_row(path: str) -> str:
    name = Path(path).name
    try:
        g = read_mg(path)
    except ParseError as ex:
        return f"{name}\t-\t-\t-\t-\t-\t-\t-\t-\tparse-error: {ex}"
    bic = bool(g.vertices) and connectivity.is_biconnected(g)
    cols = [name, str(len(g.vertices)), str(len(g.edges)), _yn(bic)]
    if not bic:
        return "\t".join(cols + ["no", "no", "-", "-", "no", "ok"])
    try:
        res = components_25(g)
        c25 = is_25_connected(g)
        crit = c25 and critical.is_critical_structural(g)
        cols += [_yn(c25), _yn(is_triconnected(g)), str(len(res.tricomps)), str(len(res.components)), _yn(crit), "ok"]
    except InvariantBreach as ex:
        cols += ["-", "-", "-", "-", "-", f"invariant-breach: {ex}"]
    return "\t".join(cols)


def cmd_corpus(args) -> int:
    files = sorted(str(p) for p in Path(args.directory).glob("*.mg"))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(_corpus_row, files))
    else:
        rows = [_corpus_row(f) for f in files]
    atomic_write(args.output, "\n".join([_TSV_HEADER] + rows) + "\n")
    breaches = sum("invariant-breach" in r for r in rows)
    print(f"{len(rows)} files, {breaches} invariant breaches")
    return 3 if breaches else 0


_COMMANDS = {
    "tricomp": cmd_tricomp,
    "comp25": cmd_comp25,
    "check": cmd_check,
    "reduce": cmd_reduce,
    "cycles": cmd_cycles,
    "gen": cmd_gen,
    "corpus": cmd_corpus,
}


def main(argv=None) -> int:
    try:
        args, extra = build_parser().parse_known_args(argv)
        if extra and (args.command != "gen" or any(t.startswith("-") for t in extra)):
            raise _UsageError(f"unrecognized arguments: {' '.join(extra)}")
        if extra:
            args.args += extra
        return _COMMANDS[args.command](args)
    except _UsageError as ex:
        print(f"usage error: {ex}", file=sys.stderr)
        return 1
    except ParseError as ex:
        print(f"parse error: {ex}", file=sys.stderr)
        return 1
    except OSError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    except InvariantBreach as ex:
        print(f"invariant breach: {ex}", file=sys.stderr)
        return 3
    except GraphError as ex:
        print(f"{type(ex).__name__}: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
