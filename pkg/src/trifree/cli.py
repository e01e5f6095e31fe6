"""Command-line interface: one verb per module.

Exit codes: 0 success / all checks pass, 1 verification failure
(certificates are written to a sidecar .g6 file), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families, verify
from .analysis import CSV_HEADER, invariants, minimal_destabilisers
from .enumerate import EnumerationSpec, enumeration_cap, enumerate_graphs
from .graph import GraphError, parse_graph6, read_graph6, to_graph6

_FAMILY_BUILDERS = {
    "chain": (families.chain, True),
    "bicycle": (families.bicycle, True),
    "shackled-chain": (families.shackled_chain, True),
    "cycle": (families.cycle, True),
    "w5": (families.w5, False),
    "gp72": (families.gp72, False),
    "s1": (families.s1, False),
    "s2": (families.s2, False),
}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="trifree",
        description="Verification toolkit for the triangle-free invariant "
                    "nu = 3e - 17n + 35*alpha + N(C4).")
    sub = p.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="construct a named family member")
    fam.add_argument("name", choices=sorted(_FAMILY_BUILDERS))
    fam.add_argument("--k", type=int, default=None,
                     help="family parameter (cycle length for `cycle`)")
    fam.add_argument("--format", choices=("text", "json", "csv"), default="json")

    inv = sub.add_parser("invariants", help="invariant records for graph6 input")
    inv.add_argument("input", nargs="?", default="-",
                     help="graph6 file, or - for stdin")
    inv.add_argument("--format", choices=("text", "json", "csv"), default="json")

    enu = sub.add_parser("enumerate", help="stream graph6 lines per order")
    enu.add_argument("--n-max", type=int, required=True)
    enu.add_argument("--girth", type=int, choices=(4, 5), default=4)
    enu.add_argument("--connected", action="store_true")
    enu.add_argument("--max-degree", type=int, default=None)
    enu.add_argument("--count-only", action="store_true",
                     help="print one class count per order")
    enu.add_argument("--jobs", type=int, default=1)

    dst = sub.add_parser("destab", help="minimal destabilisers for graph6 input")
    dst.add_argument("input", nargs="?", default="-")
    dst.add_argument("--max-size", type=int, default=4)
    dst.add_argument("--format", choices=("text", "json"), default="json")

    ver = sub.add_parser("verify", help="run the verification suites")
    ver.add_argument("--n-max", type=int, default=9)
    ver.add_argument("--suite", default="all",
                     choices=("all", "theorem", "properties", "chains",
                              "edge-numbers"))
    ver.add_argument("--k-max", type=int, default=6,
                     help="largest chain parameter for the chain lemmas")
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--format", choices=("text", "json"), default="json")
    ver.add_argument("--no-timing", action="store_true")
    ver.add_argument("--out", type=str, default=None)

    edg = sub.add_parser("edge-numbers", help="minimum edge-count table")
    edg.add_argument("--n-max", type=int, default=8)
    edg.add_argument("--k-max", type=int, default=None)
    edg.add_argument("--format", choices=("text", "json", "csv"), default="json")

    return p


def _open_input(arg: str):
    if arg == "-":
        return sys.stdin
    return open(arg, "r", encoding="ascii")


def _emit_record(rec, fmt: str, out, g6: str | None = None) -> None:
    if fmt == "json":
        d = rec.to_json_dict()
        if g6 is not None:
            d["graph6"] = g6
        out.write(json.dumps(d) + "\n")
    elif fmt == "csv":
        out.write(rec.to_csv_row() + "\n")
    else:
        d = rec.to_json_dict()
        pairs = " ".join(f"{k}={d[k]}" for k in
                         ("n", "e", "alpha", "c4", "nu", "t", "girth",
                          "edge_critical"))
        out.write(f"{d['name'] or g6 or '-'}: {pairs}\n")


def _cmd_family(args) -> int:
    builder, takes_k = _FAMILY_BUILDERS[args.name]
    if takes_k:
        if args.k is None:
            raise GraphError(f"family {args.name} needs --k")
        g = builder(args.k)
    else:
        if args.k is not None:
            raise GraphError(f"family {args.name} takes no --k")
        g = builder()
    sys.stdout.write(to_graph6(g) + "\n")
    rec = invariants(g)
    if args.format == "csv":
        sys.stdout.write(CSV_HEADER + "\n")
    _emit_record(rec, args.format, sys.stdout, g6=to_graph6(g))
    return 0


def _cmd_invariants(args) -> int:
    if args.format == "csv":
        sys.stdout.write(CSV_HEADER + "\n")
    with _open_input(args.input) as fh:
        for i, g in enumerate(read_graph6(fh)):
            g6 = to_graph6(g)
            rec = invariants(g, name=g.label or g6)
            _emit_record(rec, args.format, sys.stdout, g6=g6)
    return 0


def _cmd_enumerate(args) -> int:
    if args.n_max > enumeration_cap():
        raise GraphError(f"--n-max {args.n_max} above the enumeration cap "
                         f"{enumeration_cap()}")
    for n in range(1, args.n_max + 1):
        spec = EnumerationSpec(order=n, connected_only=args.connected,
                               min_girth=args.girth, max_degree=args.max_degree)
        if args.count_only:
            count = 0
            for _ in _enumerate_jobs(spec, args.jobs):
                count += 1
            sys.stdout.write(f"{count}\n")
        else:
            for g in _enumerate_jobs(spec, args.jobs):
                sys.stdout.write(to_graph6(g) + "\n")
    return 0


def _enumerate_jobs(spec: EnumerationSpec, jobs: int):
    if jobs <= 1:
        yield from enumerate_graphs(spec)
        return
    for part in range(jobs):
        yield from enumerate_graphs(spec, partition=(part, jobs))


def _cmd_destab(args) -> int:
    with _open_input(args.input) as fh:
        for g in read_graph6(fh):
            max_size = min(args.max_size, g.n - 1)
            report = minimal_destabilisers(g, max_size)
            payload = {
                "graph6": to_graph6(g),
                "alpha": report.alpha,
                "max_size": report.max_size,
                "r_stable_up_to": report.r_stable_up_to,
                "minimal_destabilisers": [
                    {"vertices": sorted(s.vertices), "connected": s.connected}
                    for s in report.minimal_sets
                ],
            }
            if args.format == "json":
                sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
            else:
                sets = " ".join(
                    "{%s}%s" % (",".join(map(str, sorted(s.vertices))),
                                "" if s.connected else "*")
                    for s in report.minimal_sets) or "-"
                sys.stdout.write(
                    f"{payload['graph6']}: alpha={report.alpha} "
                    f"r_stable_up_to={report.r_stable_up_to} minimal=[{sets}]\n")
    return 0


def _cmd_verify(args) -> int:
    suites = (["theorem", "properties", "chains", "edge-numbers"]
              if args.suite == "all" else [args.suite])
    if args.n_max > enumeration_cap():
        raise GraphError(f"--n-max {args.n_max} above the enumeration cap "
                         f"{enumeration_cap()}")
    report = verify.run_suites(args.n_max, suites, jobs=args.jobs,
                               k_max_chains=args.k_max)
    include_timing = not args.no_timing
    text = (report.to_json(include_timing) if args.format == "json"
            else report.to_text(include_timing))
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    if not report.ok():
        certs = report.failure_certificates()
        sidecar = Path(args.out).with_suffix(".failures.g6") if args.out \
            else Path("trifree-failures.g6")
        sidecar.write_text("".join(c + "\n" for c in certs), encoding="ascii")
        sys.stderr.write(f"FAIL: {len(certs)} failure certificates written "
                         f"to {sidecar}\n")
        return 1
    return 0


def _cmd_edge_numbers(args) -> int:
    table = verify.edge_number_table(args.n_max, args.k_max)
    if args.format == "json":
        payload = {
            "n_max": table.n_max,
            "k_max": table.k_max,
            "rows": [c.to_json_dict() for c in table.rows],
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write("n,k,variant,min_edges,certificate,bound_ok\n")
        for c in table.rows:
            sys.stdout.write(
                f"{c.n},{c.k},{c.variant},"
                f"{'' if c.min_edges is None else c.min_edges},"
                f"{c.certificate or ''},"
                f"{'' if c.bound_ok is None else str(c.bound_ok).lower()}\n")
    else:
        for c in table.rows:
            val = "-" if c.min_edges is None else str(c.min_edges)
            flag = "" if c.bound_ok in (None, True) else " BOUND VIOLATED"
            sys.stdout.write(
                f"n={c.n} k={c.k} [{c.variant}] min_edges={val}{flag}\n")
    return 0 if table.ok() else 1


_COMMANDS = {
    "family": _cmd_family,
    "invariants": _cmd_invariants,
    "enumerate": _cmd_enumerate,
    "destab": _cmd_destab,
    "verify": _cmd_verify,
    "edge-numbers": _cmd_edge_numbers,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
            raise GraphError("--jobs must be >= 1")
        return _COMMANDS[args.command](args)
    except GraphError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
