"""Command-line front end.

    starlex order --graph c3 --root 0 --n 5 --alpha 1/2
    starlex check --max-n 12
    starlex fig1 --alpha 1/3

Exit codes: 0 pass, 1 claim violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import verify as V
from .exact import fmt_rational, parse_rational
from .wgraph import (
    GraphFormatError,
    RootedGraph,
    complete_minus_edge,
    cycle,
    path,
    read_edge_list,
    trivial,
)

ORDER_COLUMNS = ["partition", "rho_direct", "rho_quotient", "rank", "tie_class", "margin_to_next"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ns: list[int] = field(default_factory=list)
    alphas: list[Fraction] = field(default_factory=list)
    graph: str | None = None
    root: int = 0
    fmt: str = "csv"
    output: str | None = None
    tol: float = V.ORDER_TOL
    max_n: int = 20
    seed: int = 0


def builtin_graph(name: str):
    name = name.lower()
    if name == "k1":
        return trivial()
    if name == "k4e":
        return complete_minus_edge(4)
    m = re.fullmatch(r"([pc])(\d+)", name)
    if m:
        k = int(m.group(2))
        if m.group(1) == "p" and 2 <= k <= 9:
            return path(k)
        if m.group(1) == "c" and 3 <= k <= 9:
            return cycle(k)
    return None


def load_graph(source: str, root: int) -> RootedGraph:
    g = builtin_graph(source)
    if g is None:
        if not os.path.exists(source):
            raise UsageError(f"unknown builtin graph or missing file: {source}")
        try:
            g = read_edge_list(source)
        except GraphFormatError as exc:
            raise UsageError(f"{source}: {exc}") from None
        if not g.is_simple():
            raise UsageError(f"{source}: A_alpha needs a simple unit-weight graph")
    if not g.is_connected():
        raise UsageError("graph must be connected")
    if not 0 <= root < g.n:
        raise UsageError(f"root {root} is not a vertex of a {g.n}-vertex graph")
    return RootedGraph(g, root)


def parse_alphas(values: Sequence[str]) -> list[Fraction]:
    out = []
    for chunk in values:
        for tok in chunk.split(","):
            try:
                a = parse_rational(tok)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if not 0 <= a < 1:
                raise UsageError(f"alpha must lie in [0, 1), got {tok}")
            out.append(a)
    return out


def parse_ns(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"bad n or n-range: {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo < 1 or hi < lo:
        raise UsageError(f"bad n or n-range: {text!r}")
    return list(range(lo, hi + 1))


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("STARLEX_THREADS", "1")))
    except ValueError:
        return 1


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_order(cfg: RunConfig) -> int:
    g = load_graph(cfg.graph or "k1", cfg.root)
    jobs = [(n, a) for a in cfg.alphas for n in cfg.ns]

    def run(job):
        n, a = job
        return V.verify_main_theorem(g, n, a, cfg.tol, name=cfg.graph or "k1")

    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        reports = list(pool.map(run, jobs))
    if cfg.fmt == "json":
        payload = [r.to_dict() for r in reports]
        _emit(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n", cfg.output)
    else:
        chunks = []
        for (n, a), r in zip(jobs, reports):
            head = "" if len(jobs) == 1 else f"# n={n} alpha={fmt_rational(a)}\n"
            chunks.append(head + r.to_csv(ORDER_COLUMNS))
        _emit("".join(chunks), cfg.output)
    failed = [r for r in reports if not r.verdict]
    for r in failed:
        for item in r.failures:
            print(f"violation at {item['partition']}: {item.get('problems')}", file=sys.stderr)
    return 1 if failed else 0


def run_check_suites(max_n: int = 20, seed: int = 0, graph: RootedGraph | None = None, name: str = "G") -> list[V.VerificationReport]:
    alphas = V.DEFAULT_ALPHAS
    chain_n = min(9, max_n)
    graphs = V.family() if graph is None else {name: graph}
    return [
        V.suite_partitions(chain_n),
        V.suite_f_oracle(min(12, max_n), alphas),
        V.suite_split_independence(max_n, alphas, oracle_n=min(12, max_n)),
        V.suite_telescoping_identity(min(12, max_n), alphas),
        V.suite_telescoping_sign(max_n, alphas),
        V.suite_theta(max(2, min(25, max_n + 5)), alphas),
        V.suite_bridge_coalescence(100, seed),
        V.suite_submatrix_strictness(50, seed + 1),
        V.suite_dominance(50, seed + 2),
        V.suite_case_chains(chain_n, alphas, graphs),
    ]


def cmd_check(cfg: RunConfig) -> int:
    graph = load_graph(cfg.graph, cfg.root) if cfg.graph else None
    reports = run_check_suites(cfg.max_n, cfg.seed, graph, cfg.graph or "G")
    summary = {
        "suites": [
            {
                "claim": r.claim,
                "params": r.params,
                "checked": len(r.items),
                "failed": len(r.failures),
                "verdict": "pass" if r.verdict else "fail",
                "first_failures": r.failures[:5],
            }
            for r in reports
        ],
        "verdict": "pass" if all(r.verdict for r in reports) else "fail",
    }
    _emit(json.dumps(summary, indent=2) + "\n", cfg.output)
    return 0 if summary["verdict"] == "pass" else 1


def cmd_fig1(cfg: RunConfig) -> int:
    alpha = cfg.alphas[0] if cfg.alphas else Fraction(1, 3)
    report = V.verify_fig1(alpha)
    if cfg.fmt == "json":
        _emit(report.to_json() + "\n", cfg.output)
    else:
        lines = [f"alpha = {fmt_rational(alpha)}"]
        for item in report.items:
            status = "ok" if item["verdict"] else "MISMATCH"
            lines.append(f"{item['item']}: {status}")
            for row in item.get("matrix", []):
                lines.append("  " + "  ".join(f"{x:>14}" for x in row))
            for m in item.get("mismatches", []):
                lines.append(f"  entry ({m[0]},{m[1]}): got {m[2]}, expected {m[3]}")
            if item["item"] == "radius":
                lines.append(f"  rho(A_alpha(H)) = {item['rho_H']:.15g}, rho(Q_s) = {item['rho_Q_s']:.15g}")
        lines.append("row order of Q_s: " + ", ".join(report.params["permutation"]))
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0 if report.verdict else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starlex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default):
        p.add_argument("--format", dest="fmt", choices=["csv", "json", "text"], default=fmt_default)
        p.add_argument("--output", "-o", help="write here instead of stdout")

    p = sub.add_parser("order", help="rank G(a, v) over P(n) by A_alpha spectral radius")
    p.add_argument("--graph", default="k1", help="builtin (k1, p2..p9, c3..c9, k4e) or edge-list file")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--n", required=True, help="n or a range like 2-9")
    p.add_argument("--alpha", action="append", default=None, help="p/q or decimal; repeat or comma-separate")
    p.add_argument("--tol", type=float, default=V.ORDER_TOL)
    common(p, "csv")

    p = sub.add_parser("check", help="run the identity and lemma suites")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph", default=None, help="restrict chain checks to this graph")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--output", "-o")

    p = sub.add_parser("fig1", help="reproduce the C_3 worked example")
    p.add_argument("--alpha", action="append", default=None)
    common(p, "text")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, output=getattr(args, "output", None))
    cfg.fmt = getattr(args, "fmt", "json")
    if args.command == "order":
        cfg.ns = parse_ns(args.n)
        cfg.alphas = parse_alphas(args.alpha or ["0"])
        cfg.graph, cfg.root, cfg.tol = args.graph, args.root, args.tol
        if cfg.tol <= 0:
            raise UsageError("--tol must be positive")
    elif args.command == "check":
        if args.max_n < 1:
            raise UsageError("--max-n must be positive")
        cfg.max_n, cfg.seed, cfg.graph, cfg.root = args.max_n, args.seed, args.graph, args.root
    else:
        cfg.alphas = parse_alphas(args.alpha or ["1/3"])
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        cfg = config_from_args(args)
        handler = {"order": cmd_order, "check": cmd_check, "fig1": cmd_fig1}[cfg.command]
        return handler(cfg)
    except UsageError as exc:
        print(f"starlex: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
