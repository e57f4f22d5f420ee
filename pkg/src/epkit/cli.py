"""Command-line entry point.

Exit status: 0 on success, 1 when a certificate fails verification, 2 for
bad input or parameters, 3 when a promised guarantee fails (a diagnostic
dump goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path as FsPath
from typing import Any

from .certificates import Certificate
from .classic import solve_classic
from .corpus import format_report, load_spec, report_failed, run_corpus
from .errors import BudgetExceeded, PreconditionError, TheoremGap
from .generators import MODELS, build_model
from .io import FormatError, dumps_certificate, format_graph, loads_certificate, read_graph
from .longcycles import solve_long
from .oracle import (
    exact_max_packing,
    exact_min_hitting,
    has_long_cycle_exact,
    verify_certificate,
    verify_classic_certificate,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_GAP = 3


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        FsPath(out).write_text(text, encoding="utf-8")


def _parse_value(raw: str) -> Any:
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def _model_params(pairs: list[str]) -> dict[str, Any]:
    params = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise PreconditionError(f"expected key=value, got {item!r}")
        params[key] = _parse_value(value)
    return params


def _report_verdict(status: str, problems: list[str]) -> int:
    if status == "violation":
        for p in problems:
            print(f"violation: {p}", file=sys.stderr)
        return EXIT_VIOLATION
    if status == "unverifiable":
        print(f"unverifiable: {'; '.join(problems)}", file=sys.stderr)
    return EXIT_OK


def cmd_solve_long(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    cert = solve_long(g, args.k, args.l)
    _emit(dumps_certificate(cert), args.out)
    if args.verify:
        rep = verify_certificate(g, args.k, args.l, cert)
        return _report_verdict(rep.status, rep.problems)
    return EXIT_OK


def cmd_solve_classic(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    cert = solve_classic(g, args.k, args.mode)
    _emit(dumps_certificate(cert), args.out)
    if args.verify:
        rep = verify_classic_certificate(g, args.k, cert)
        return _report_verdict(rep.status, rep.problems)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    g = build_model(args.model, _model_params(args.params), args.seed)
    _emit(format_graph(g), args.out)
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    rows = run_corpus(load_spec(args.spec), timing=args.timing, jobs=args.jobs)
    _emit(format_report(rows), args.out)
    return EXIT_VIOLATION if report_failed(rows) else EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    result: dict[str, Any] = {"l": args.l}
    try:
        if args.what in ("nu", "all"):
            nu = exact_max_packing(g, args.l)
            result["nu"] = nu.value
            result["packing"] = [list(c.edges) for c in nu.cycles]
        if args.what in ("tau", "all"):
            tau = exact_min_hitting(g, args.l)
            result["tau"] = tau.value
            result["hitting"] = sorted(tau.edges)
        if args.what in ("has-long-cycle", "all"):
            result["has_long_cycle"] = has_long_cycle_exact(g, args.l)
    except BudgetExceeded as exc:
        result = {"l": args.l, "status": "unverifiable", "reason": str(exc)}
    _emit(json.dumps(result, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    cert = loads_certificate(FsPath(args.certificate).read_text(encoding="utf-8"))
    if isinstance(cert, Certificate):
        rep = verify_certificate(g, cert.k, cert.ell, cert)
    else:
        rep = verify_classic_certificate(g, cert.k, cert)
    _emit(json.dumps({"status": rep.status, "problems": rep.problems}, indent=2) + "\n", args.out)
    return EXIT_VIOLATION if rep.status == "violation" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epkit", description="Cycle packing or hitting-set certificates.")
    parser.add_argument(
        "--budget-edges",
        type=int,
        help="edge limit for exhaustive checks (overrides EPKIT_BUDGET_EDGES)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-long", help="k edge-disjoint cycles of length >= l, or a hitting edge set")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve_long)

    p = sub.add_parser("solve-classic", help="k disjoint cycles, or a hitting vertex/edge set")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve_classic)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("model", choices=MODELS)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("corpus", help="run a JSON corpus spec and write a CSV report")
    p.add_argument("spec")
    p.add_argument("--timing", action="store_true", help="fill the wall_ms column")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("oracle", help="exact packing/hitting numbers by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--what", choices=("nu", "tau", "has-long-cycle", "all"), default="all")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a certificate file against a graph file")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("EPKIT_BUDGET_EDGES")
    if args.budget_edges is not None:
        os.environ["EPKIT_BUDGET_EDGES"] = str(args.budget_edges)
    try:
        return args.func(args)
    except (FormatError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremGap as exc:
        dump = {"error": "THEOREM_GAP", "message": str(exc), "diagnostic": exc.diagnostic}
        print(json.dumps(dump, indent=2, default=str), file=sys.stderr)
        return EXIT_GAP
    finally:
        # the flag applies to this invocation only, also when called in-process
        if saved is None:
            os.environ.pop("EPKIT_BUDGET_EDGES", None)
        else:
            os.environ["EPKIT_BUDGET_EDGES"] = saved


if __name__ == "__main__":
    sys.exit(main())
