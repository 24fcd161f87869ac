"""``powerdom`` command line.

Exit codes: 0 success, 1 domain/validation/usage error, 2 solver budget
exhausted (or claims skipped for budget), 3 claim-verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from powerdom.constructive import constructive_kpds
from powerdom.edgelist import format_edge_list, read_edge_list, write_labels
from powerdom.families import VARIANTS, FamilySpec, LabeledGraph, generate
from powerdom.forts import FortViolation, verify_fort
from powerdom.graph import GraphError, find_claw, is_connected, regular_degree
from powerdom.harness import FAIL, PASS, format_table, report_document, verify_paper_claims
from powerdom.propagation import monitored_fixpoint, propagate
from powerdom.solvers import BudgetExhausted, solve
from powerdom.transforms import blowup_clique, blowup_independent

log = logging.getLogger("powerdom")

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_CLAIM = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would collide with the budget code
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _write_graph(lg: LabeledGraph, out: str | None) -> None:
    _emit(format_edge_list(lg.graph), out)
    if out:
        write_labels(lg.labels, f"{out}.labels.json")


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, r=args.r, q=args.q, k=args.k, j=args.j, l=args.l, t=args.t)
    lg = generate(spec)
    log.info("%s: n=%d m=%d", spec.label, lg.graph.n, lg.graph.edge_count)
    _write_graph(lg, args.output)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    if args.method == "constructive":
        if args.param != "pk":
            raise ValueError("the constructive method only computes k-power dominating sets")
        doc = constructive_kpds(g, args.k).to_dict()
    else:
        doc = solve(g, args.param, args.k, args.budget).to_dict()
    _emit(_dump(doc), args.output)
    return EXIT_OK


def cmd_propagate(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    trace = propagate(g, args.k, args.seed)
    _emit(_dump(trace.to_dict()), args.output)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    claw = find_claw(g)
    doc: dict = {
        "n": g.n,
        "m": g.edge_count,
        "connected": is_connected(g),
        "regular_degree": regular_degree(g),
        "claw_free": claw is None,
        "claw": None if claw is None else list(claw),
    }
    ok = True
    if args.seed is not None:
        monitored = monitored_fixpoint(g, args.k, args.seed)
        doc["k"] = args.k
        doc["seed"] = sorted(set(args.seed))
        doc["kpds"] = len(monitored) == g.n
        doc["unmonitored"] = sorted(set(range(g.n)) - set(monitored))
        ok &= doc["kpds"]
    if args.fort is not None:
        doc["k"] = args.k
        try:
            doc["fort"] = verify_fort(g, args.k, args.fort).to_dict()
        except FortViolation as exc:
            doc["fort"] = None
            doc["fort_error"] = str(exc)
            ok = False
    _emit(_dump(doc), args.output)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_transform(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    op = blowup_independent if args.kind == "blowup-indep" else blowup_clique
    _write_graph(op(g, args.k), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    records = verify_paper_claims(args.max_n, args.budget)
    sys.stdout.write(format_table(records))
    doc = report_document(records, args.max_n)
    if args.output:
        Path(args.output).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    statuses = {r.status for r in records}
    if FAIL in statuses:
        return EXIT_CLAIM
    return EXIT_OK if statuses <= {PASS} else EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powerdom", description="Generalized power domination toolkit.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="edge-list file")
        p.add_argument("-o", "--output", help="write output here instead of stdout")
        return p

    p = sub.add_parser("gen", help="generate a family member")
    p.add_argument("family", choices=VARIANTS)
    for name in ("r", "q", "k", "j", "l", "t"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("-o", "--output", help="edge-list path; labels go to <path>.labels.json")
    p.set_defaults(func=cmd_gen)

    p = graph_command("solve", "exact or constructive optimum")
    p.add_argument("--param", choices=("pk", "dom", "tdom"), default="pk")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--method", choices=("exact", "constructive"), default="exact")
    p.add_argument("--budget", type=int, help="feasibility evaluations (default: $POWERDOM_BUDGET or 10^8)")
    p.set_defaults(func=cmd_solve)

    p = graph_command("propagate", "propagation trace from a seed")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=_vertex_list, required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_propagate)

    p = graph_command("check", "structural checks, k-PDS test, fort test")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=_vertex_list, help="test whether this set is a k-PDS")
    p.add_argument("--fort", type=_vertex_list, help="test whether this set is a k-fort")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="blow-up constructions")
    p.add_argument("kind", choices=("blowup-indep", "blowup-clique"))
    p.add_argument("graph", help="edge-list file")
    p.add_argument("-o", "--output", help="edge-list path; labels go to <path>.labels.json")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="reproduce the closed-form family values")
    p.add_argument("--suite", choices=("paper",), default="paper")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"powerdom: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ValueError, OSError) as exc:
        print(f"powerdom: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(cli_main())
