"""Command-line entry point: one JSON document per invocation.

Every subcommand is a thin adapter over the library; no computation lives
here.  Exit codes: 0 success, 2 invalid input, 3 evaluation budget
exhausted, 4 open/unresolved case, so scripts can branch on the outcome.
``q`` is spelled ``inf`` for the unconstrained white budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import INFINITY, SpreadParams, check_spreading_sequence, closure, is_spreading_set
from .formulas import (
    OpenProblemError,
    blue_perimeter,
    grid_sigma,
    grid_witness,
    probe_grid_conjecture,
    sigma_closed_form,
)
from .gadgets import (
    build_qforcing_gadget,
    build_spreading_gadget,
    certify_qforcing_gadget,
    certify_spreading_gadget,
)
from .graphs import (
    Graph,
    GraphFormatError,
    build_family,
    family_from_tokens,
    parse_edge_list,
)
from .solver import BudgetExhausted, sigma_exact
from .trees import check_property_pnp, search_property_pnp, sigma_tree, subtree_partition

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_OPEN = 4


def _parse_q(text: str) -> int | float:
    if text.strip().lower() == "inf":
        return INFINITY
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q must be an integer or 'inf', got {text!r}")


def _parse_ids(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer ids, got {text!r}")


def _parse_cells(text: str) -> list[tuple[int, int]]:
    cells = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.replace(",", " ").split()
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"cell must be 'col,row', got {chunk!r}")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError(f"cell must be integers, got {chunk!r}")
    return cells


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "edges", None):
        with open(args.edges, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if getattr(args, "family", None):
        return build_family(family_from_tokens(args.family))
    raise ValueError("a graph is required: pass --edges FILE or --family NAME ARGS")


def _add_graph_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--edges", metavar="FILE", help="edge-list file")
    sub.add_argument(
        "--family",
        nargs="+",
        metavar="NAME",
        help="named family and integer parameters, e.g. --family grid 3 3",
    )


def _add_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--q", type=_parse_q, required=True, help="positive integer or 'inf'")


def _emit(doc: dict, code: int = EXIT_OK) -> int:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    return code


def _sigma_exit(doc: dict) -> int:
    return _emit(doc, EXIT_OPEN if doc.get("status") == "open" else EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spread",
        description="Spreading numbers on graphs: closures, exact values, witnesses.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for randomized suites (current subcommands are deterministic)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("closure", help="run the rule to fixpoint, emit the trace")
    _add_graph_args(s)
    _add_params(s)
    s.add_argument("--set", type=_parse_ids, required=True, metavar="IDS")

    s = subs.add_parser("check", help="validate a spreading set or a full sequence")
    _add_graph_args(s)
    _add_params(s)
    s.add_argument("--set", type=_parse_ids, required=True, metavar="IDS")
    s.add_argument("--sequence", type=_parse_ids, metavar="IDS")

    s = subs.add_parser("solve", help="exact spreading number by search")
    _add_graph_args(s)
    _add_params(s)
    s.add_argument("--budget", type=int, help="max closure evaluations")

    s = subs.add_parser("tree", help="spreading number of a tree")
    _add_graph_args(s)
    _add_params(s)

    s = subs.add_parser("partition", help="smallest bounded-degree subtree partition")
    _add_graph_args(s)
    s.add_argument("--q", type=int, required=True)

    s = subs.add_parser("formula", help="closed-form value for a named family")
    s.add_argument("--family", nargs="+", required=True, metavar="NAME")
    _add_params(s)

    s = subs.add_parser("grid", help="grid spreading number by formula")
    _add_params(s)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)

    s = subs.add_parser("witness", help="explicit minimum grid spreading set")
    _add_params(s)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)

    s = subs.add_parser("perimeter", help="boundary length of a blue cell set")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cells", type=_parse_cells, required=True, metavar="C,R;C,R")

    s = subs.add_parser("gadget", help="build a hardness-reduction gadget")
    _add_graph_args(s)
    s.add_argument("--kind", choices=("qforcing", "spreading"), required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)

    s = subs.add_parser("certify", help="certify a gadget equality exactly")
    _add_graph_args(s)
    s.add_argument("--kind", choices=("qforcing", "spreading"), required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--budget", type=int)

    s = subs.add_parser("probe-conjecture", help="compare (3,3) and (3,4) grid values")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--budget", type=int)

    s = subs.add_parser("property-pnp", help="tightness certificate for a tree")
    _add_graph_args(s)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--set", type=_parse_ids, metavar="IDS")
    s.add_argument("--ordering", type=_parse_ids, metavar="IDS")

    return parser


def _run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "closure":
        G = _load_graph(args)
        _, trace = closure(G, SpreadParams(args.p, args.q), args.set)
        return _emit(trace.to_json())
    if cmd == "check":
        G = _load_graph(args)
        params = SpreadParams(args.p, args.q)
        if args.sequence is not None:
            ok = check_spreading_sequence(G, params, args.set, args.sequence)
            return _emit({"valid_sequence": ok})
        return _emit({"spreading": is_spreading_set(G, params, args.set)})
    if cmd == "solve":
        G = _load_graph(args)
        res = sigma_exact(G, SpreadParams(args.p, args.q), args.budget)
        return _sigma_exit(res.to_json())
    if cmd == "tree":
        G = _load_graph(args)
        return _sigma_exit(sigma_tree(G, SpreadParams(args.p, args.q)).to_json())
    if cmd == "partition":
        G = _load_graph(args)
        return _emit(subtree_partition(G, args.q).to_json())
    if cmd == "formula":
        spec = family_from_tokens(args.family)
        res = sigma_closed_form(spec, SpreadParams(args.p, args.q))
        return _sigma_exit(res.to_json())
    if cmd == "grid":
        return _sigma_exit(grid_sigma(args.p, args.q, args.m, args.n).to_json())
    if cmd == "witness":
        cells = grid_witness(args.p, args.q, args.m, args.n)
        return _emit({"cells": sorted(cells), "size": len(cells)})
    if cmd == "perimeter":
        return _emit({"perimeter": blue_perimeter(args.m, args.n, args.cells)})
    if cmd == "gadget":
        G = _load_graph(args)
        if args.kind == "qforcing":
            if args.q is None:
                raise ValueError("qforcing gadget requires --q")
            out = build_qforcing_gadget(G, args.q)
        else:
            if args.p is None:
                raise ValueError("spreading gadget requires --p")
            out = build_spreading_gadget(G, args.p)
        return _emit(
            {
                "n": out.n,
                "edges": [[u, v] for u, v in out.edges()],
                "labels": {str(v): lab for v, lab in (out.labels or ())},
            }
        )
    if cmd == "certify":
        G = _load_graph(args)
        if args.kind == "qforcing":
            cert = certify_qforcing_gadget(G, args.q, args.budget)
        else:
            if args.p is None:
                raise ValueError("spreading certification requires --p")
            cert = certify_spreading_gadget(G, args.p, args.q, args.budget)
        return _emit(cert.to_json())
    if cmd == "probe-conjecture":
        probe = probe_grid_conjecture(args.m, args.n, args.budget)
        doc = probe.to_json()
        return _emit(doc, EXIT_BUDGET if probe.equal is None else EXIT_OK)
    if cmd == "property-pnp":
        G = _load_graph(args)
        if args.set is not None and args.ordering is not None:
            report = check_property_pnp(G, args.p, args.set, args.ordering)
            return _emit(report.to_json())
        if args.set is not None or args.ordering is not None:
            raise ValueError("--set and --ordering must be given together")
        report = search_property_pnp(G, args.p)
        if report is None:
            return _emit({"found": False})
        doc = report.to_json()
        doc["found"] = True
        return _emit(doc)
    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except BudgetExhausted as exc:
        doc = {"status": "budget_exhausted", "evaluations": exc.evaluations}
        if exc.lower_bound is not None:
            doc["lower_bound"] = exc.lower_bound
        if exc.upper_bound is not None:
            doc["upper_bound"] = exc.upper_bound
        return _emit(doc, EXIT_BUDGET)
    except OpenProblemError as exc:
        return _emit({"status": "open", "note": str(exc)}, EXIT_OPEN)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
