"""``dpcolor`` command line.

Exit codes: 0 ok/colorable, 2 input error, 3 non-colorable, 4 invalid cover,
5 budget exceeded, 6 claim failed.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import claims
from .constructions import (
    GADGETS,
    conjecture_probe,
    cube_cover_F,
    cube_graph,
    edge_cover_regular,
    planar_bipartite_gadget,
    shannon_counterexample,
    twisted_cycle_cover,
)
from .cover import CoverValidationError, Cover, parse_cover, serialize_cover, validate_cover
from .graph import Graph, GraphFormatError, complete_multigraph, format_graph, line_graph, parse_graph
from .solver import DEFAULT_BUDGET, BudgetExceeded, chi_dp_search, count_transversals, solve

EXIT_OK, EXIT_INPUT, EXIT_NONE, EXIT_INVALID, EXIT_BUDGET, EXIT_CLAIM = 0, 2, 3, 4, 5, 6


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_cover(path: str) -> Cover:
    try:
        return parse_cover(_read(path))
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_validate(args) -> int:
    try:
        cov = parse_cover(_read(args.path), validate=False)
    except GraphFormatError as exc:
        raise InputError(f"{args.path}: {exc}") from None
    rep = validate_cover(cov)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_solve(args) -> int:
    cov = _load_cover(args.path)
    st = solve(cov)
    if st.colorable:
        print("COLORABLE")
        for u, i in enumerate(st.witness.picks):
            print(f"pick {u} {i}")
    else:
        print("NONE")
    if args.count:
        print(f"count {count_transversals(cov)}")
    if args.stats:
        print(f"nodes {st.nodes}")
    return EXIT_OK if st.colorable else EXIT_NONE


def cmd_chi_dp(args) -> int:
    g = _load_graph(args.path)
    if args.edge:
        g = line_graph(g)
    try:
        k, last = chi_dp_search(g, max_k=args.max_k, budget=args.budget, jobs=args.jobs)
    except BudgetExceeded as exc:
        print(f"budget exceeded at k={exc.k}: {exc.total} covers > {exc.budget}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    print(k)
    if args.witness and last is not None and last.counterexample is not None:
        Path(args.witness).write_text(serialize_cover(last.counterexample), encoding="utf-8")
    return EXIT_OK


def _perm(text: str) -> tuple[int, ...]:
    if text == "identity":
        return (0, 1)
    if text == "swap":
        return (1, 0)
    return tuple(int(x) for x in text.split(","))


def cmd_gadget(args) -> int:
    name = args.name
    if name not in GADGETS:
        raise InputError(f"unknown gadget {name!r}; known: {', '.join(GADGETS)}")
    graph_out = None
    if name == "twisted-cycle":
        shift = _perm(args.shift) if args.shift else None
        if shift is not None and len(shift) != args.k:
            raise InputError("--shift length must equal --k")
        g, cov = twisted_cycle_cover(args.n, args.k, shift)
        text = serialize_cover(cov)
    elif name == "cube":
        text = format_graph(cube_graph())
    elif name == "cube-cover-f":
        text = serialize_cover(cube_cover_F())
    elif name == "planar-bipartite-4":
        gad = planar_bipartite_gadget()
        text, graph_out = serialize_cover(gad.cover), format_graph(gad.graph)
    elif name == "edge-cover-regular":
        if not args.graph:
            raise InputError("edge-cover-regular needs --graph")
        try:
            cov = edge_cover_regular(_load_graph(args.graph), args.uv)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        text = serialize_cover(cov)
    elif name == "ktk":
        text = format_graph(complete_multigraph(args.k, args.t))
    elif name == "shannon":
        g, claimed = shannon_counterexample(args.d)
        print(f"claimed chi_dp(MLine(K^{args.d}_2)) = {claimed}", file=sys.stderr)
        text = format_graph(g)
    else:  # conjecture-probe
        if not args.graph:
            raise InputError("conjecture-probe needs --graph")
        try:
            print(conjecture_probe(_load_graph(args.graph), budget=args.budget))
        except BudgetExceeded as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_BUDGET
        return EXIT_OK
    _emit(text, args.output)
    if args.graph_out and graph_out is not None:
        Path(args.graph_out).write_text(graph_out, encoding="utf-8")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    if args.claim and args.claim not in claims.CLAIMS:
        raise InputError(f"unknown claim {args.claim!r}; known: {', '.join(claims.CLAIMS)}")
    ids = claims.select(args.claim, args.tier)
    failed = 0
    print(f"{'id':<5} {'result':<6} {'time':>8}  claim")
    for cid in ids:
        r = claims.run_claim(cid)
        failed += not r.passed
        timing = f"{r.seconds:7.2f}s" if args.timing else "       -"
        print(f"{r.id:<5} {'PASS' if r.passed else 'FAIL':<6} {timing}  {r.anchor}: {r.detail}")
    return EXIT_OK if not failed else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpcolor", description="DP-coloring (correspondence coloring) toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a cover file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("solve", help="find a transversal of a cover")
    s.add_argument("path")
    s.add_argument("--count", action="store_true", help="also print the exact number of transversals")
    s.add_argument("--stats", action="store_true", help="print search node count")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("chi-dp", help="exact DP-chromatic number of a graph file")
    s.add_argument("path")
    s.add_argument("--edge", action="store_true", help="DP-chromatic index (of the line graph)")
    s.add_argument("--max-k", type=int, default=None)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max covers enumerated per k")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--witness", help="write the counterexample cover at k-1 here")
    s.set_defaults(func=cmd_chi_dp)

    s = sub.add_parser("gadget", help="emit a named construction")
    s.add_argument("name")
    s.add_argument("-o", "--output")
    s.add_argument("--graph-out", help="also write the base graph (planar-bipartite-4)")
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--t", type=int, default=1)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--shift", help="'identity', 'swap' or comma-separated permutation")
    s.add_argument("--graph", help="graph file (edge-cover-regular, conjecture-probe)")
    s.add_argument("--uv", type=int, default=0, help="edge id for edge-cover-regular")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("verify-paper", help="run the registered claim checks")
    s.add_argument("--claim")
    s.add_argument("--tier", choices=claims.TIERS)
    s.add_argument("--timing", action="store_true", help="print wall-clock times (non-deterministic)")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CoverValidationError as exc:
        print(exc.report)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
