"""Command-line front end.

Exit codes: 0 success or ACCEPT, 1 semantic rejection, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

from . import explorer
from .generators import DEFAULT_COORD_BOUND, DegenerateConfiguration, cyclic, random_realizable
from .graphs import Graph
from .labeling import (SignLabeling, build_cocircuit_graph, count_disjoint_crabbed_paths,
                       expected_crabbed_paths, is_sign_labeling)
from .om import FormatError, OrientedMatroid, validate_axioms
from .recognition import recognize


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: Optional[str], name: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = Path(out)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / name).write_text(text)


def cmd_generate(args) -> int:
    if not args.n >= args.r >= 2:
        raise UsageError(f"need n >= r >= 2, got n={args.n}, r={args.r}")
    if args.kind == "cyclic":
        m = cyclic(args.n, args.r)
    else:
        if args.coord_bound < 8:
            raise UsageError("--coord-bound must be at least 8")
        try:
            m = random_realizable(args.n, args.r, args.seed, args.coord_bound)
        except DegenerateConfiguration as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    _emit(m.to_text(), args.out, "om.txt")
    return 0


def cmd_validate(args) -> int:
    m = OrientedMatroid.from_text(_read(args.om_file))
    report = validate_axioms(m.cocircuits, m.n, m.r)
    print(report.summary())
    for witness in report.witnesses[:20]:
        print("violation:", *witness)
    return 0 if report.ok else 1


def cmd_build_graph(args) -> int:
    m = OrientedMatroid.from_text(_read(args.om_file))
    report = validate_axioms(m.cocircuits, m.n, m.r)
    if not report.ok:
        print(report.summary(), file=sys.stderr)
        for witness in report.witnesses[:20]:
            print("violation:", *witness, file=sys.stderr)
        return 1
    g, lab = build_cocircuit_graph(m)
    out = args.out or "."
    _emit(g.to_text(), out, "graph.txt")
    _emit(lab.to_text(), out, "labeling.txt")
    print(f"graph: {g.vertex_count} vertices, {g.edge_count} edges")
    return 0


def cmd_recognize(args) -> int:
    g = Graph.from_text(_read(args.graph_file))
    if args.max_backtrack is not None and args.max_backtrack < 0:
        raise UsageError("--max-backtrack must be nonnegative")
    result = recognize(g, all_candidates=args.all_candidates)
    if args.all_candidates:
        for c in result.candidates:
            status = "ok" if c.accepted else f"failed at {c.stage}"
            print(f"candidate {c.candidate}: {status}")
    if not result.accepted:
        print(f"NOT-COCIRCUIT-GRAPH {result.stage}")
        if result.message:
            print(result.message, file=sys.stderr)
        return 1
    out = args.out or "."
    _emit(result.om.to_text(), out, "om.txt")
    _emit(result.labeling.to_text(), out, "labeling.txt")
    p = result.params
    print(f"ACCEPT n={p.n} r={p.r} antipode={result.antipode}")
    return 0


def cmd_crabbed_check(args) -> int:
    g = Graph.from_text(_read(args.graph_file))
    lab = SignLabeling.from_text(_read(args.labeling_file))
    if len(lab) != g.vertex_count:
        raise UsageError(f"labeling has {len(lab)} vertices, graph has {g.vertex_count}")
    if args.pairs < 0:
        raise UsageError("--pairs must be nonnegative")
    if not is_sign_labeling(g, lab):
        print("labeling is not a sign labeling of the graph")
        return 1
    pairs = [(v, w) for v, w in combinations(range(g.vertex_count), 2)]
    if args.pairs:
        rng = random.Random(args.seed)
        pairs = sorted(rng.sample(pairs, min(args.pairs, len(pairs))))
    failures = 0
    for v, w in pairs:
        found = count_disjoint_crabbed_paths(g, lab, v, w)
        expected = expected_crabbed_paths(lab, v, w)
        if found != expected:
            failures += 1
        print(f"{v} {w} {found} = {expected}" if found == expected
              else f"{v} {w} {found} != {expected} FAIL")
    print(f"{len(pairs) - failures}/{len(pairs)} pairs match")
    return 1 if failures else 0


def cmd_explore(args) -> int:
    corpus = [OrientedMatroid.from_text(_read(path)) for path in args.om_files]
    rows = explorer.dv_census(corpus)
    _emit(explorer.census_csv(rows), args.out, "census.csv")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocircuit",
        description="Uniform oriented matroids and recognition of their cocircuit graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a realizable uniform oriented matroid")
    p.add_argument("-n", type=int, required=True, help="ground-set size")
    p.add_argument("-r", type=int, required=True, help="rank")
    p.add_argument("--kind", choices=("cyclic", "random"), default="cyclic")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-bound", type=int, default=DEFAULT_COORD_BOUND)
    p.add_argument("--out", help="directory for om.txt (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="check the cocircuit axioms of an om file")
    p.add_argument("om_file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build-graph", help="write the cocircuit graph and its labeling")
    p.add_argument("om_file")
    p.add_argument("--out", help="output directory (default: .)")
    p.set_defaults(func=cmd_build_graph)

    p = sub.add_parser("recognize", help="decide whether a graph is a cocircuit graph")
    p.add_argument("graph_file")
    p.add_argument("--all-candidates", action="store_true",
                   help="evaluate every antipode candidate and list each outcome")
    p.add_argument("--max-backtrack", type=int, default=None,
                   help="accepted for compatibility; labeling reconstruction never backtracks")
    p.add_argument("--out", help="directory for om.txt and labeling.txt on ACCEPT (default: .)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("crabbed-check", help="compare disjoint crabbed path counts with |L0(v) - L0(w)|")
    p.add_argument("graph_file")
    p.add_argument("labeling_file")
    p.add_argument("--pairs", type=int, default=0, help="number of sampled pairs (0: all)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_crabbed_check)

    p = sub.add_parser("explore", help="distance and candidate census as CSV")
    p.add_argument("om_files", nargs="+")
    p.add_argument("--out", help="directory for census.csv (default: stdout)")
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
