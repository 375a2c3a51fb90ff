"""Command-line front end.

Subcommands: check (single graphs or a file, full report), verify
(exhaustive enumeration), stream (graph6 file), extremal (boundary
graph report), sample (seeded random graphs), serve (HTTP service).
Every verification subcommand exits 0 exactly when no verdict was
inconsistent.  check --server sends the graph to a running service
instead of evaluating locally.
"""

import argparse
import json
import os
import sys

from .graph6 import Graph6Error, parse_graph6
from .harness import (
    ENUMERATION,
    SAMPLE,
    HarnessError,
    VerificationRun,
    evaluate_graph,
    extremal_report,
    parse_theorem_list,
    row_to_obj,
    stream_graph6_file,
    verify,
)


def _fmt(x):
    return f"{x:.12g}"


def _yes_no(value):
    if value is None:
        return "-"
    return "yes" if value else "no"


def print_row_text(row, out=None):
    out = sys.stdout if out is None else out
    prof = row.profile
    print(f"graph6: {row.graph6}", file=out)
    print(f"  n={row.n} delta={row.delta} kappa={row.kappa} alpha={row.alpha}", file=out)
    print(f"  lambda1={_fmt(row.lambda1)} lambda_n={_fmt(row.lambda_n)} mu1={_fmt(row.mu1)}", file=out)
    print(f"  traceable={_yes_no(prof.traceable)} hamiltonian={_yes_no(prof.hamiltonian)} "
          f"homogeneously_traceable={_yes_no(prof.homogeneously_traceable)} "
          f"hamiltonian_connected={_yes_no(prof.hamiltonian_connected)}", file=out)
    for v in row.verdicts:
        s = "-" if v.s is None else str(v.s)
        k = "-" if v.k is None else str(v.k)
        print(f"  {v.theorem_id:<17} s={s:<2} k={k:<2} {v.hypothesis:<8} "
              f"bound={_fmt(v.bound_value):<15} observed={_fmt(v.observed_value):<15} "
              f"excluded={_yes_no(v.excluded_extremal)} applicable={_yes_no(v.applicability)} "
              f"predicted={_yes_no(v.predicted)} oracle={_yes_no(v.oracle_truth)} "
              f"consistent={_yes_no(v.consistent)}", file=out)


def _print_summary(run, out_path=None, fmt=None):
    print(f"source:       {run.source}")
    print(f"scanned:      {run.scanned}")
    print(f"applicable:   {run.applicable}")
    print(f"predicted:    {run.predicted}")
    print(f"boundary:     {run.boundary}")
    print(f"inconsistent: {run.inconsistent}")
    for cx in run.counterexamples:
        print(f"counterexample: {cx.graph6} {cx.theorem_id} s={cx.s}")
    if out_path:
        print(f"report: {out_path} ({fmt})")


def _add_report_flags(p, with_n_filters=True):
    p.add_argument("--theorems", default="all",
                   help="comma list of theorem ids, optionally id:s (default: all)")
    p.add_argument("--min-kappa", type=int, default=0, metavar="K",
                   help="skip graphs with connectivity below K")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv",
                   help="report row format (default: csv)")
    p.add_argument("--out", metavar="PATH", help="write report rows to PATH")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes for bulk evaluation (default: 1)")
    p.add_argument("--eps", type=float, default=None,
                   help="boundary tolerance (default: 1e-9 or SPECTROHAM_EPS)")
    if with_n_filters:
        p.add_argument("--n-min", type=int, default=1, help="smallest order to keep")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spectroham",
        description="Verify spectral sufficient conditions for Hamiltonian properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="full report for graph6 strings or a file of them")
    p.add_argument("graph", help="a graph6 record, or a path to a graph6 file")
    p.add_argument("--theorems", default="all")
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--server", metavar="URL",
                   help="send to a running service instead of evaluating locally")
    p.add_argument("--skip-bad", action="store_true",
                   help="when reading a file, skip malformed lines")

    p = sub.add_parser("verify", help="exhaustively verify all connected graphs up to --n-max")
    p.add_argument("--n-max", type=int, required=True, metavar="N",
                   help="largest order to enumerate (at most 7)")
    _add_report_flags(p)

    p = sub.add_parser("stream", help="verify graphs from a graph6 file, one per line")
    p.add_argument("--file", required=True, metavar="PATH")
    p.add_argument("--n-max", type=int, default=None, metavar="N")
    p.add_argument("--skip-bad", action="store_true",
                   help="skip malformed lines instead of aborting")
    _add_report_flags(p)

    p = sub.add_parser("extremal", help="report for the boundary graph K_{k,k-s+1}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True, choices=(1, 0, -1))
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sample", help="verify seeded random graphs G(n, 1/2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100, metavar="C")
    p.add_argument("--seed", type=int, default=0)
    _add_report_flags(p, with_n_filters=False)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _cmd_check(args):
    if args.server:
        return _cmd_check_server(args)
    if os.path.exists(args.graph):
        graphs = stream_graph6_file(args.graph, skip_bad=args.skip_bad)
    else:
        graphs = [parse_graph6(args.graph)]
    queries = parse_theorem_list(args.theorems)
    ok = True
    for g in graphs:
        row = evaluate_graph(g, queries, eps=args.eps)
        consistent = all(v.consistent for v in row.verdicts)
        ok = ok and consistent
        if args.format == "json":
            obj = row_to_obj(row)
            obj["consistent"] = consistent
            print(json.dumps(obj))
        else:
            print_row_text(row)
    return 0 if ok else 1


def _cmd_check_server(args):
    import httpx

    url = args.server.rstrip("/") + "/check"
    payload = {"graph6": args.graph}
    if args.theorems != "all":
        payload["theorems"] = args.theorems
    if args.eps is not None:
        payload["eps"] = args.eps
    response = httpx.post(url, json=payload, timeout=60.0)
    if response.status_code != 200:
        print(f"server error {response.status_code}: {response.text}", file=sys.stderr)
        return 2
    obj = response.json()
    print(json.dumps(obj, indent=2))
    return 0 if obj.get("consistent", False) else 1


def _cmd_verify(args):
    run = VerificationRun(
        source=ENUMERATION,
        n_min=args.n_min,
        n_max=args.n_max,
        min_kappa=args.min_kappa,
        theorems=parse_theorem_list(args.theorems),
        eps=args.eps,
        workers=args.workers,
    )
    result = verify(run, out=args.out, fmt=args.format)
    _print_summary(result, args.out, args.format)
    return 0 if result.inconsistent == 0 else 1


def _cmd_stream(args):
    run = VerificationRun(
        source=args.file,
        n_min=args.n_min,
        n_max=args.n_max,
        min_kappa=args.min_kappa,
        theorems=parse_theorem_list(args.theorems),
        eps=args.eps,
        workers=args.workers,
        skip_bad=args.skip_bad,
    )
    result = verify(run, out=args.out, fmt=args.format)
    _print_summary(result, args.out, args.format)
    return 0 if result.inconsistent == 0 else 1


def _cmd_extremal(args):
    row = extremal_report(args.k, args.s, eps=args.eps)
    if args.format == "json":
        print(json.dumps(row_to_obj(row)))
    else:
        print_row_text(row)
    return 0


def _cmd_sample(args):
    run = VerificationRun(
        source=SAMPLE,
        sample_n=args.n,
        sample_count=args.count,
        sample_seed=args.seed,
        min_kappa=args.min_kappa,
        theorems=parse_theorem_list(args.theorems),
        eps=args.eps,
        workers=args.workers,
    )
    result = verify(run, out=args.out, fmt=args.format)
    _print_summary(result, args.out, args.format)
    return 0 if result.inconsistent == 0 else 1


def _cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


COMMANDS = {
    "check": _cmd_check,
    "verify": _cmd_verify,
    "stream": _cmd_stream,
    "extremal": _cmd_extremal,
    "sample": _cmd_sample,
    "serve": _cmd_serve,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (Graph6Error, HarnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
