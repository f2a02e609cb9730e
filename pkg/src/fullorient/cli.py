"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 parse/input error, 2 cyclic
orientation, 3 negative verdict (gap in the spectrum, not chordal), 4 oracle
cap exceeded, 5 infeasible target.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .chordal import is_chordal
from .families import KPRIME_TRIANGLE, k32, kprime
from .graph import Graph, GraphError, ParseError, parse_edge_list, render_edge_list
from .oracle import DEFAULT_CAP, CapExceededError, dependency_spectrum, min_orientation_with_nontrivial_arc
from .orientation import (
    CyclicOrientationError,
    Orientation,
    d_max,
    dependent_arcs,
    parse_orientation,
    render_orientation,
    topological_order,
)
from .report import (
    EXIT_CAP,
    EXIT_CYCLIC,
    EXIT_INFEASIBLE,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_PARSE,
    dumps,
    make_report,
)
from .synthesis import InfeasibleTargetError, insertion_extension, plan_synthesis, random_chordal, source_extension


class _Input:
    """A parsed graph file plus the translation between file ids and graph ids."""

    def __init__(self, path: str):
        g, mapping = parse_edge_list(_read(path), with_mapping=True)
        self.graph: Graph = g
        self.to_graph = mapping
        self.to_file = {new: old for old, new in mapping.items()}

    def orientation(self, path: str) -> Orientation:
        return parse_orientation(self.graph, _read(path), self.to_graph)

    def ids(self, vertices) -> list[int]:
        return [self.to_file[v] for v in vertices]

    def arcs(self, arcs) -> list[list[int]]:
        return [[self.to_file[u], self.to_file[v]] for u, v in sorted(arcs)]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(command: str, inp: _Input, result: dict, code: int) -> int:
    print(dumps(make_report(command, inp.graph, result, code)))
    return code


def _acyclic_or_exit(d: Orientation, inp: _Input) -> list[int] | None:
    try:
        return topological_order(d)
    except CyclicOrientationError as exc:
        cycle = inp.ids(exc.cycle)
        print("error: orientation has a directed cycle: " + " -> ".join(map(str, cycle + cycle[:1])), file=sys.stderr)
        return None


def cmd_analyze(args) -> int:
    inp = _Input(args.graph)
    d = inp.orientation(args.orientation)
    order = _acyclic_or_exit(d, inp)
    if order is None:
        return EXIT_CYCLIC
    rep = dependent_arcs(d)
    result = {
        "d": rep.count,
        "dependent": inp.arcs(rep.dependent),
        "topological_order": inp.ids(order),
        "d_max": d_max(inp.graph),
    }
    return _emit("analyze", inp, result, EXIT_OK)


def cmd_spectrum(args) -> int:
    inp = _Input(args.graph)
    spec = dependency_spectrum(inp.graph, cap=args.cap, jobs=args.jobs)
    return _emit("spectrum", inp, spec.as_dict(), EXIT_OK if spec.fully_orientable else EXIT_NEGATIVE)


def cmd_chordal(args) -> int:
    inp = _Input(args.graph)
    verdict = is_chordal(inp.graph)
    if args.peo:
        seq = verdict.peo.order if verdict else verdict.witness
        print(" ".join(map(str, inp.ids(seq))))
        return EXIT_OK if verdict else EXIT_NEGATIVE
    if verdict:
        return _emit("chordal", inp, {"chordal": True, "peo": inp.ids(verdict.peo.order)}, EXIT_OK)
    return _emit("chordal", inp, {"chordal": False, "witness": inp.ids(verdict.witness)}, EXIT_NEGATIVE)


def cmd_synthesize(args) -> int:
    inp = _Input(args.graph)
    verdict = is_chordal(inp.graph)
    try:
        plan = plan_synthesis(inp.graph, args.target, cap=args.cap, core_oracle=not verdict)
    except (InfeasibleTargetError, CapExceededError) as exc:
        if verdict:
            raise
        # no chordality guarantee to fall back on: report the obstruction
        print(f"note: {exc}", file=sys.stderr)
        return _emit("synthesize", inp, {"chordal": False, "witness": inp.ids(verdict.witness)}, EXIT_NEGATIVE)
    labels = inp.to_file
    text = render_orientation(plan.orientation, labels)
    if args.trace:
        sys.stderr.write(plan.trace())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    if args.arcs:
        sys.stdout.write(text)
        return EXIT_OK
    result = {
        "target": args.target,
        "d": dependent_arcs(plan.orientation).count,
        "orientation": inp.arcs(plan.orientation.arcs),
    }
    if args.trace:
        result["trace"] = plan.trace().splitlines()
    return _emit("synthesize", inp, result, EXIT_OK)


def cmd_gen(args) -> int:
    sys.stdout.write(render_edge_list(random_chordal(args.n, args.max_q, args.seed)))
    return EXIT_OK


def cmd_dot(args) -> int:
    inp = _Input(args.graph)
    d = inp.orientation(args.orientation)
    if _acyclic_or_exit(d, inp) is None:
        return EXIT_CYCLIC
    dependent = dependent_arcs(d).dependent
    lines = ["digraph orientation {", "  node [shape=circle];"]
    lines += [f"  {inp.to_file[v]};" for v in inp.graph.vertices]
    for u, v in sorted(d.arcs):
        style = ' [color=red, penwidth=2, class="dependent"]' if (u, v) in dependent else ""
        lines.append(f"  {inp.to_file[u]} -> {inp.to_file[v]}{style};")
    lines.append("}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_example(args) -> int:
    """Walk through the K_{3(2)} / K' example."""
    base, ext = k32(), kprime()
    tri = sorted(KPRIME_TRIANGLE)
    sb, se = dependency_spectrum(base), dependency_spectrum(ext)
    six = min_orientation_with_nontrivial_arc(base, tri, bound=6)
    dep6 = dependent_arcs(six).dependent
    in_tri = sorted(a for a in dep6 if set(a) <= KPRIME_TRIANGLE)
    src = dependent_arcs(source_extension(six, tri, 6)).count
    ins = dependent_arcs(insertion_extension(six, tri, 6)).count
    strict = min_orientation_with_nontrivial_arc(base, tri)
    out = [
        f"K_3(2): n={base.order} m={base.size} spectrum {sb.keys} fully orientable: {sb.fully_orientable}",
        f"orientation with d={len(dep6)}; dependent arcs in triangle {tri}: {in_tri}",
        f"  source extension onto the triangle    -> d={src}",
        f"  insertion extension onto the triangle -> d={ins}",
        f"minimum orientations with a non-trivial triangle arc: {'yes' if strict else 'none'}",
        f"K': n={ext.order} m={ext.size} spectrum {se.keys} d_min={se.d_min} d_max={d_max(ext)} "
        f"fully orientable: {se.fully_orientable}",
    ]
    print("\n".join(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fullorient", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="dependent arcs of an orientation")
    s.add_argument("graph")
    s.add_argument("orientation", help="arc file ('u > v' per line), '-' for stdin")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("spectrum", help="exact dependency spectrum by enumeration")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum edge count (default %(default)s)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("chordal", help="chordality verdict with PEO or chordless cycle")
    s.add_argument("graph")
    s.add_argument("--peo", action="store_true", help="print only the PEO (or witness) as one line")
    s.set_defaults(func=cmd_chordal)

    s = sub.add_parser("synthesize", help="orientation with exactly --target dependent arcs")
    s.add_argument("graph")
    s.add_argument("--target", type=int, required=True)
    s.add_argument("--trace", action="store_true", help="print the layer-by-layer plan to stderr")
    s.add_argument("-o", "--output", help="also write the orientation to this arc file")
    s.add_argument("--arcs", action="store_true", help="print the arc file instead of the JSON report")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="edge cap for exhaustive steps (default %(default)s)")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("gen", help="random chordal graph in edge-list format")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-q", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("dot", help="Graphviz rendering with dependent arcs highlighted")
    s.add_argument("graph")
    s.add_argument("orientation")
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("example", help="reproduce the K_3(2) / K' worked example")
    s.set_defaults(func=cmd_example)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "gen" and (args.n < 1 or args.max_q < 1):
        print("error: --n and --max-q must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except (ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InfeasibleTargetError as exc:
        lo = "?" if exc.d_min is None else exc.d_min
        print(f"error: {exc}", file=sys.stderr)
        print(f"[{lo}, {exc.d_max}]", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
