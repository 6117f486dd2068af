"""Command-line front end.

Usage sketch::

    lapsim --family cycle --n 5 report
    lapsim --family cycle --n-range 3:9 --format csv batch
    lapsim verify-paper [--only cycles]

Exit codes: 0 success, 1 regression failure, 2 input error, 3 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import analysis, ehrhart, graph as graphs
from .errors import DomainError, FeasibilityError, InternalInconsistencyError, LapsimError

EXIT_OK = 0
EXIT_REGRESSION = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3

CSV_HEADER = "n,kappa,volume,hstar,reflexive,ell,symmetric,unimodal,idp,notes"


def _env_int(name, default):
    val = os.environ.get(name)
    if val is None:
        return default
    try:
        return int(val)
    except ValueError as exc:
        raise DomainError(f"{name} must be an integer, got {val!r}") from exc


def build_parser():
    p = argparse.ArgumentParser(
        prog="lapsim",
        description="Exact Ehrhart-theoretic analysis of Laplacian simplices.",
    )
    src = p.add_argument_group("input source (choose one)")
    src.add_argument("--edge-list", metavar="PATH", help="edge-list file")
    src.add_argument("--family", choices=graphs.FAMILIES, help="named graph family")
    p.add_argument("--n", type=int, help="vertex count for --family")
    p.add_argument("--n-range", metavar="A:B", help="inclusive range of n for batch")
    p.add_argument("--count", type=int, default=1, help="instances per n (random families)")
    p.add_argument("--seed", type=int, default=0, help="seed for random families")
    p.add_argument("--whisker", action="store_true", help="whisker every vertex")
    p.add_argument(
        "--bridge-with",
        metavar="SPEC",
        help="bridge with a second graph: 'family:n[:seed]' or an edge-list path",
    )
    p.add_argument(
        "--attach-path", metavar="V:K", help="attach a path of K vertices at vertex V"
    )
    p.add_argument("--strategy", choices=ehrhart.STRATEGIES, help="h* strategy override")
    p.add_argument("--fpp-cap", type=int, default=None, help="parallelepiped size cap")
    p.add_argument("--idp-cap", type=int, default=None, help="IDP check size cap")
    p.add_argument("--jobs", type=int, default=None, help="parallel rows for batch")
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default=None, help="output format"
    )
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("report", help="full property report for one graph")
    sub.add_parser("batch", help="one CSV row per graph over a range")
    vp = sub.add_parser("verify-paper", help="run the desk-scale regression suite")
    vp.add_argument("--only", help="filter regression cases by substring")
    return p


def _parse_graph_spec(spec):
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) not in (2, 3):
            raise DomainError(f"bad graph spec {spec!r}; want family:n[:seed]")
        kind, n = parts[0], int(parts[1])
        seed = int(parts[2]) if len(parts) == 3 else None
        return graphs.family(kind, n, seed=seed)
    return graphs.read_edge_list(spec)


def _resolve_graph(args, n=None, seed=None):
    if args.edge_list and args.family:
        raise DomainError("give exactly one of --edge-list and --family")
    if args.edge_list:
        G = graphs.read_edge_list(args.edge_list)
    elif args.family:
        n = n if n is not None else args.n
        if n is None:
            raise DomainError("--family requires --n (or --n-range for batch)")
        G = graphs.family(args.family, n, seed=seed if seed is not None else args.seed)
    else:
        raise DomainError("no input: give --edge-list or --family")
    if args.whisker:
        G = graphs.whisker(G)
    if args.bridge_with:
        G = graphs.bridge(G, _parse_graph_spec(args.bridge_with), 1, 1)
    if args.attach_path:
        try:
            v, k = (int(tok) for tok in args.attach_path.split(":"))
        except ValueError as exc:
            raise DomainError(f"bad --attach-path {args.attach_path!r}; want V:K") from exc
        G = graphs.attach_path(G, v, k)
    return G


def _analyze(args, G):
    fpp_cap = args.fpp_cap if args.fpp_cap is not None else _env_int(
        "LAPSIM_FPP_CAP", ehrhart.DEFAULT_FPP_CAP
    )
    idp_cap = args.idp_cap if args.idp_cap is not None else _env_int(
        "LAPSIM_IDP_CAP", analysis.DEFAULT_IDP_CAP
    )
    return analysis.analyze(G, strategy=args.strategy, fpp_cap=fpp_cap, idp_cap=idp_cap)


def _render_text(report):
    d = report.to_dict()
    lines = [
        f"graph       n={d['graph']['n']} edges={d['graph']['edges']}",
        f"kappa       {d['kappa']}",
        f"volume      {d['volume']}",
        f"hstar       {d['hstar']}  (strategy: {d['strategy']})",
        f"reflexive   {d['reflexive']}",
        f"ell         {d['ell']}",
        f"symmetric   {d['symmetric']}",
        f"unimodal    {d['unimodal']}",
        f"idp         {d['idp']}",
    ]
    if d["notes"]:
        lines.append(f"notes       {d['notes']}")
    return "\n".join(lines)


def _csv_row(report):
    d = report.to_dict()
    hstar = "" if d["hstar"] is None else ";".join(str(x) for x in d["hstar"])
    idp = "" if d["idp"] is None else str(d["idp"])
    ell = "" if d["ell"] is None else str(d["ell"])
    notes = "; ".join(d["notes"])
    return (
        f"{d['graph']['n']},{d['kappa']},{d['volume']},{hstar},"
        f"{d['reflexive']},{ell},{d['symmetric']},{d['unimodal']},{idp},{notes}"
    )


def cmd_report(args, out):
    report = _analyze(args, _resolve_graph(args))
    fmt = args.format or "json"
    if fmt == "json":
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    elif fmt == "csv":
        out.write(CSV_HEADER + "\n" + _csv_row(report) + "\n")
    else:
        out.write(_render_text(report) + "\n")
    return EXIT_OK


def _batch_targets(args):
    if args.n_range:
        try:
            a, b = (int(tok) for tok in args.n_range.split(":"))
        except ValueError as exc:
            raise DomainError(f"bad --n-range {args.n_range!r}; want A:B") from exc
        ns = range(a, b + 1)
    elif args.n is not None:
        ns = [args.n]
    elif args.edge_list:
        ns = [None]
    else:
        raise DomainError("batch needs --n-range, --n, or --edge-list")
    targets = []
    for n in ns:
        for rep in range(max(1, args.count)):
            targets.append((n, args.seed + rep))
    return targets


def cmd_batch(args, out):
    targets = _batch_targets(args)
    jobs = args.jobs if args.jobs is not None else _env_int("LAPSIM_JOBS", 1)

    def run_row(target):
        n, seed = target
        try:
            return _csv_row(_analyze(args, _resolve_graph(args, n=n, seed=seed)))
        except LapsimError as exc:
            return f"{n if n is not None else ''},,,,,,,,,error: {exc}"

    out.write(CSV_HEADER + "\n")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_row, targets))
    else:
        rows = [run_row(t) for t in targets]
    for row in rows:
        out.write(row + "\n")
    return EXIT_OK


def cmd_verify_paper(args, out):
    report = analysis.paper_regression(only=args.only)
    for case in report.cases:
        status = "PASS" if case.passed else "FAIL"
        detail = f"  ({case.detail})" if case.detail else ""
        out.write(f"{status}  {case.name}{detail}\n")
    out.write(
        f"{len(report.cases) - len(report.failures)}/{len(report.cases)} checks passed\n"
    )
    return EXIT_OK if report.ok else EXIT_REGRESSION


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "report":
            return cmd_report(args, out)
        if args.command == "batch":
            return cmd_batch(args, out)
        return cmd_verify_paper(args, out)
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (DomainError, FeasibilityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
