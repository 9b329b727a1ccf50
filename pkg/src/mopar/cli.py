"""Command line front end.

Exit codes: 0 all checks pass, 1 a violation or verification failure was
found, 2 a resource budget left the computation incomplete.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import Graph6Error, graph6_decode, graph6_encode
from .matchings import certificate_is_valid, tutte_berge_certificate
from .mops import (
    TRIANGULATION_FORMAT_HEADER,
    enumerate_mops,
    enumerate_triangulations,
)
from .rainbow import certificate_from_json, verify_certificate
from .runner import (
    Limits,
    ResultCache,
    ar_class,
    emit_table,
    evaluate_bounds,
    lemma_bipartite_check,
)
from .solver import EXACT, ar_brute_force, ar_exact

PASS, FAIL, INCOMPLETE = 0, 1, 2


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.labeled:
        if args.count_only:
            print(sum(1 for _ in enumerate_triangulations(args.n)))
            return PASS
        print(TRIANGULATION_FORMAT_HEADER)
        for tri in enumerate_triangulations(args.n):
            print(tri.text())
        return PASS
    mops = enumerate_mops(args.n)
    if args.count_only:
        print(len(mops))
        return PASS
    for g in mops:
        print(graph6_encode(g))
    return PASS


def _cmd_ar(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph)
    result = ar_exact(
        g, args.k, max_nodes=args.budget_nodes, max_millis=args.budget_ms
    )
    payload = result.to_json()
    if args.oracle:
        payload["oracle_value"] = ar_brute_force(g, args.k)
    print(json.dumps(payload, sort_keys=True))
    if args.oracle and payload["oracle_value"] != result.value:
        return FAIL
    return PASS if result.mode == EXACT else INCOMPLETE


def _cmd_ar_class(args: argparse.Namespace) -> int:
    cache = ResultCache(args.cache) if args.cache else None
    limits = Limits(
        max_nodes=args.budget_nodes,
        max_millis=args.budget_ms,
        target_value=args.target,
    )
    if args.extended:
        if cache is None:
            print("--extended requires --cache for resumability", file=sys.stderr)
            return FAIL
        if limits.max_nodes is None and limits.max_millis is None:
            limits = Limits(
                max_nodes=None, max_millis=60_000.0, target_value=args.target
            )
    result = ar_class(
        args.n, args.k, limits=limits, jobs=args.jobs, cache=cache,
        audit_fraction=0.0 if args.extended else 0.05,
    )
    summary = {
        "n": result.n,
        "k": result.k,
        "value": result.value,
        "complete": result.complete,
        "argmax": result.argmax,
        "unsolved_count": len(result.unsolved),
        "bounds": evaluate_bounds(
            result.n, result.k, result.value, result.complete
        ).to_json(),
    }
    if args.out:
        with open(args.out, "w") as handle:
            json.dump(result.to_json(), handle, sort_keys=True, indent=2)
        summary["out"] = args.out
    print(json.dumps(summary, sort_keys=True))
    return PASS if result.complete else INCOMPLETE


def _cmd_table(args: argparse.Namespace) -> int:
    cache = ResultCache(args.cache) if args.cache else None
    limits = Limits(max_nodes=args.budget_nodes, max_millis=args.budget_ms)
    path = emit_table(
        _parse_range(args.n), _parse_range(args.k),
        args.out, args.format, limits=limits, jobs=args.jobs, cache=cache,
    )
    print(f"wrote {path}")
    return PASS


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.cert) as handle:
        data = json.load(handle)
    g, k, coloring = certificate_from_json(data)
    outcome = verify_certificate(g, coloring, k, coloring.num_colors)
    print(json.dumps({"ok": outcome.ok, "reason": outcome.reason}))
    return PASS if outcome.ok else FAIL


def _cmd_lemma(args: argparse.Namespace) -> int:
    report = lemma_bipartite_check(args.max_n)
    print(json.dumps(report.to_json(), sort_keys=True))
    return PASS if report.ok else FAIL


def _cmd_tutte_berge(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph)
    cert = tutte_berge_certificate(g)
    print(cert.dumps())
    return PASS if certificate_is_valid(g, cert) else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mop",
        description="Anti-Ramsey numbers of matchings in maximal outerplanar graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list maximal outerplanar graphs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument(
        "--labeled", action="store_true",
        help="emit every labeled polygon triangulation in the text format",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("ar", help="exact ar(G, M_k) for one graph6 graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against full partition enumeration")
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.set_defaults(func=_cmd_ar)

    p = sub.add_parser("ar-class", help="ar over all MOPs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.add_argument("--extended", action="store_true",
                   help="heavy-sweep mode: per-graph budget, resumable cache")
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--target", type=int, default=None,
                   help="stop once some member witnesses this many colors")
    p.add_argument("--out", default=None, help="write full per-graph JSON here")
    p.set_defaults(func=_cmd_ar_class)

    p = sub.add_parser("table", help="sweep a grid of (n, k) cells to CSV/JSON")
    p.add_argument("--n", required=True, help="range A..B")
    p.add_argument("--k", required=True, help="range C..D")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="check a coloring certificate file")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemma-bipartite",
                       help="edge bound over all bipartite outerplanar graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("tutte-berge", help="matching-number certificate for a graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_tutte_berge)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"graph6 error: {exc}", file=sys.stderr)
        return FAIL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
