"""Command-line entry point: ``outerlink classify | verify | witness``.

Exit status is 0 on success, 1 when a sweep finds a counterexample or a
requested certificate cannot exist, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import verify
from .classify import classify, report_dict
from .diagram import (
    convex_diagram,
    dump_diagram,
    find_nonsplit_outer_link,
    link_parity_sum,
    two_page_linkless_diagram,
)
from .graph import Graph, GraphError, standard_graph
from .graphio import parse_graphs, to_graph6
from .planarity import find_named_minor, is_outerplanar, is_planar
from .s1 import CyclicOrder, find_nonsplit_link

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

WITNESS_KINDS = ("linkless-order", "s1-link", "minor", "outer-link", "linkless-diagram")


def _load(args) -> tuple[list[Graph], dict[str, Any]]:
    if args.graph:
        return [standard_graph(args.graph)], {"source": f"named:{args.graph}"}
    if args.input in (None, "-"):
        text = sys.stdin.read()
        source = "stdin"
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
        source = args.input
    return parse_graphs(text, args.input_format), {"source": source, "format": args.input_format}


def _emit(args, report: dict[str, Any], text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _flag(b: bool) -> str:
    return "yes" if b else "no"


# --------------------------------------------------------------------------
# classify
# --------------------------------------------------------------------------


def cmd_classify(args) -> int:
    graphs, descriptor = _load(args)
    start = time.perf_counter()
    results = []
    lines = []
    for g in graphs:
        r = classify(g, cross_check=not args.no_cross_check)
        d = report_dict(g, r)
        results.append(d)
        f = d["flags"]
        lines.append(f"graph {d['graph6']}  ({g.order} vertices, {g.size} edges)")
        lines.append(f"  outerplanar                 {_flag(f['outerplanar'])}")
        lines.append(f"  planar                      {_flag(f['planar'])}")
        lines.append(f"  intrinsically S1-linked     {_flag(f['intrinsically_s1_linked'])}")
        lines.append(f"  intrinsically outer-linked  {_flag(f['intrinsically_outer_linked'])}")
        lines.append(f"  outer-flat / outer-linkless {_flag(f['outer_flat_and_linkless'])}")
        if args.witness:
            for key, value in d["witnesses"].items():
                lines.append(f"  {key}: {json.dumps(value)}")
    report: dict[str, Any] = {"command": "classify", "input": descriptor, "results": results}
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    _emit(args, report, "\n".join(lines) + "\n")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def cmd_verify(args) -> int:
    start = time.perf_counter()
    res = verify.run(args.theorem, n=args.n, trials=args.trials, seed=args.seed, jobs=args.jobs)
    report: dict[str, Any] = {
        "command": "verify",
        "theorem": args.theorem,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "results": res.as_dict(),
    }
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    status = "PASS" if res.passed else "FAIL"
    details = ", ".join(f"{k}={v}" for k, v in res.details.items())
    text = f"{status} {res.theorem}: {res.checked} checked ({details})\n"
    if res.counterexample:
        text += f"  counterexample: {res.counterexample}\n"
    _emit(args, report, text)
    return EXIT_OK if res.passed else EXIT_FAIL


# --------------------------------------------------------------------------
# witness
# --------------------------------------------------------------------------


def _witness(g: Graph, kind: str) -> tuple[bool, dict[str, Any]]:
    """(available, payload) for one certificate request."""
    if kind in ("linkless-order", "s1-link"):
        op = is_outerplanar(g)
        if kind == "linkless-order":
            if op.outerplanar:
                return True, {"order": CyclicOrder(op.boundary_order).labels(g)}
            return False, {
                "reason": f"graph has a {op.obstruction.pattern} minor, so it is not outerplanar "
                "and every cyclic order of its vertices contains a non-split link",
                "minor": op.obstruction.describe(g),
            }
        if not op.outerplanar:
            o = CyclicOrder(tuple(g.vertices))
            link = find_nonsplit_link(o, g)
            return True, {"order": o.labels(g), "edges": [g.edge_label(link.first), g.edge_label(link.second)]}
        return False, {
            "reason": "graph is outerplanar, so some cyclic order has no non-split link",
            "linkless_order": CyclicOrder(op.boundary_order).labels(g),
        }
    if kind == "minor":
        op = is_outerplanar(g)
        if op.outerplanar:
            return False, {"reason": "graph is outerplanar: it has neither a K4 nor a K3,2 minor"}
        out = {"minor": op.obstruction.pattern, "branch_sets": op.obstruction.describe(g)}
        pl = is_planar(g)
        if not pl.planar:
            out["kuratowski_minor"] = pl.obstruction.pattern
            out["kuratowski_branch_sets"] = pl.obstruction.describe(g)
        return True, out
    if kind == "outer-link":
        if is_planar(g).planar:
            return False, {
                "reason": "graph is planar, hence outer-flat and outer-linkless; "
                "no outer-link is forced"
            }
        d = convex_diagram(g)
        link = find_nonsplit_outer_link(d)
        return True, {
            "cycle": [g.label(v) for v in link.cycle],
            "edge": g.edge_label(link.edge),
            "diagram": dump_diagram(d).splitlines(),
        }
    if kind == "linkless-diagram":
        pl = is_planar(g)
        if not pl.planar:
            d = convex_diagram(g)
            return False, {
                "reason": f"graph has a {pl.obstruction.pattern} minor; every outer-embedding contains "
                "a non-split link (for K5 and K3,3 the parity sum is 1 for every diagram)",
                "parity_sum_of_convex_diagram": link_parity_sum(d),
            }
        d = two_page_linkless_diagram(g)
        if d is None:
            return False, {
                "reason": "graph is planar (outer-linkless), but no 2-page diagram was found "
                "within the search bound"
            }
        return True, {"diagram": dump_diagram(d).splitlines()}
    raise GraphError(f"unknown witness kind {kind!r}")


def cmd_witness(args) -> int:
    graphs, descriptor = _load(args)
    results = []
    text = []
    all_ok = True
    for g in graphs:
        ok, payload = _witness(g, args.kind)
        all_ok &= ok
        results.append({"graph6": to_graph6(g), "available": ok, **payload})
        text.append(f"graph {to_graph6(g)}: {args.kind} " + ("found" if ok else "impossible"))
        for key, value in payload.items():
            if isinstance(value, list) and value and isinstance(value[0], str) and key == "diagram":
                text.append(f"  {key}:")
                text.extend(f"    {line}" for line in value)
            else:
                text.append(f"  {key}: {value if isinstance(value, str) else json.dumps(value)}")
    report = {"command": "witness", "kind": args.kind, "input": descriptor, "results": results}
    _emit(args, report, "\n".join(text) + "\n")
    return EXIT_OK if all_ok else EXIT_FAIL


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outerlink",
        description="Decide and certify intrinsic S1-linking and intrinsic outer-linking of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", help="edge-list or graph6 file ('-' or omitted: stdin)")
        p.add_argument("--graph", help="use a named graph instead (K4, K32, K5, K33, K6, K331, C5, K7, P4, Petersen)")
        p.add_argument("--input-format", choices=("auto", "edgelist", "graph6"), default="auto")

    def add_output(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timing", action="store_true", help="record wall time in the report")

    p = sub.add_parser("classify", help="five-way classification with certificates")
    add_input(p)
    add_output(p)
    p.add_argument("--witness", action="store_true", help="print certificates in text output")
    p.add_argument("--no-cross-check", action="store_true",
                   help="skip the brute-force S1 cross-check on graphs with at most 10 vertices")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustive or seeded sweep for one theorem")
    p.add_argument("theorem", choices=verify.THEOREMS)
    p.add_argument("--n", type=int, default=None, help="largest graph order for exhaustive sweeps")
    p.add_argument("--trials", type=int, default=None, help="random diagrams for seeded sweeps")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for exhaustive sweeps")
    add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="emit one certificate or explain why none exists")
    add_input(p)
    add_output(p)
    p.add_argument("--kind", choices=WITNESS_KINDS, required=True)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
