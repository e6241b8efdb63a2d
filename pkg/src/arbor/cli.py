"""Command-line entry point.

Subcommands: count, tutte, strip, phi, bounds, table1, table2, compare.
Exit codes: 0 success, 2 usage error, 3 resource-limit error.  All
diagnostics go to stderr; identical argv gives byte-identical stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import bound_report, crossover_delta
from .lattice import LatticeError, StripSpec, build_strip, get_lattice
from .multigraph import GraphError, from_edge_text, to_edge_text
from .tables import TABLE1_COLUMNS, TABLE2_COLUMNS, emit_table1, emit_table2
from .transfer import phi_estimate
from .tutte import (
    ResourceLimitError,
    brute_count_cssg,
    brute_count_forests,
    count_connected_spanning_subgraphs,
    count_spanning_forests,
    tutte,
)


def _read_graph(path):
    with open(path) as fh:
        return from_edge_text(fh.read())


def _spec_from_args(args, bc_l=None):
    return StripSpec(
        lattice=get_lattice(args.lattice),
        width=args.width,
        length=getattr(args, "length", 2) or 2,
        bc_t=args.bc_t,
        bc_l=bc_l if bc_l is not None else getattr(args, "bc_l", "free"),
    )


def cmd_count(args):
    G = _read_graph(args.graph)
    if args.cssg:
        val = brute_count_cssg(G) if args.brute else count_connected_spanning_subgraphs(G)
        print(f"N_CSSG = {val}")
    else:
        val = brute_count_forests(G) if args.brute else count_spanning_forests(G)
        print(f"N_SF = {val}")
    return 0


def cmd_tutte(args):
    T = tutte(_read_graph(args.graph))
    if args.json:
        print(json.dumps(T.to_json_dict(), sort_keys=True))
    else:
        terms = []
        for (i, j), c in sorted(T.coeffs.items()):
            part = "" if c == 1 and (i or j) else str(c)
            if i:
                part += ("x" if i == 1 else f"x^{i}")
            if j:
                part += ("y" if j == 1 else f"y^{j}")
            terms.append(part)
        print(" + ".join(terms) if terms else "0")
    return 0


def cmd_strip(args):
    spec = _spec_from_args(args)
    text = to_edge_text(build_strip(spec))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_phi(args):
    spec = _spec_from_args(args, bc_l="free")
    est = phi_estimate(spec, args.m_max)
    if args.json:
        print(json.dumps({
            "lattice": spec.lattice.key,
            "width": spec.width,
            "bc_t": spec.bc_t,
            "nu": est.nu,
            "counts": [str(c) for c in est.counts],
            "ratios": est.ratios,
            "phi": est.phi,
            "err": est.err,
            "bracket": list(est.bracket),
        }, sort_keys=True))
    else:
        print(f"lattice {spec.lattice.key}, width {spec.width}, bc_t {spec.bc_t}")
        print(f"phi = {est.phi:.10f}  (bracket [{est.bracket[0]:.12f}, {est.bracket[1]:.12f}])")
        print(f"ratio at m_max: {est.ratios[-1]:.10f}  err {est.err:.3e}")
    return 0


def cmd_bounds(args):
    if args.crossover:
        print(f"crossover delta = {crossover_delta():.4f}")
        return 0
    if args.delta is None:
        raise GraphError("bounds requires --delta or --crossover")
    rep = bound_report(args.delta)
    if args.json:
        print(json.dumps({
            "delta": rep.delta, "ssg": rep.ssg, "bcl1": rep.bcl1,
            "eta": rep.eta, "bcl2": rep.bcl2, "bcl34": rep.bcl34,
            "best": rep.best,
        }, sort_keys=True))
    else:
        print(f"delta = {rep.delta:g}")
        print(f"  2^(delta/2) = {rep.ssg:.6f}")
        print(f"  bcl1        = {rep.bcl1:.6f}")
        print(f"  bcl2        = {rep.bcl2:.6f}  (eta = {rep.eta:.7f})")
        if rep.bcl34 is not None:
            print(f"  bcl3/4      = {rep.bcl34:g}")
        print(f"  best        = {rep.best:.6f}")
    return 0


def _print_table(rows, columns, fmt):
    if fmt == "json":
        print(json.dumps(rows, sort_keys=True))
        return
    cells = [[str(r[c]) for c in columns] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(cells)
        sys.stdout.write(buf.getvalue())
        return
    widths = [
        max(len(columns[k]), max(len(row[k]) for row in cells))
        for k in range(len(columns))
    ]
    if fmt == "markdown":
        print("| " + " | ".join(c.ljust(w) for c, w in zip(columns, widths)) + " |")
        print("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        for row in cells:
            print("| " + " | ".join(v.ljust(w) for v, w in zip(row, widths)) + " |")
    else:
        print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
        for row in cells:
            print("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())


def cmd_table1(args):
    _print_table(emit_table1(), TABLE1_COLUMNS, args.format)
    return 0


def cmd_table2(args):
    _print_table(emit_table2(), TABLE2_COLUMNS, args.format)
    return 0


def cmd_compare(args):
    rows = emit_table2()
    if args.delta is not None:
        rows = [r for r in rows if r["delta"] == args.delta]
        if not rows:
            raise GraphError(f"no lattice with delta = {args.delta}")
    for r in rows:
        entries = [("phi_u", float(r["phi_u"])), ("ssg", float(r["ssg"])),
                   ("bcl1", float(r["bcl1"])), ("bcl2", float(r["bcl2"]))]
        if r["bcl34"] != "-":
            entries.append(("bcl34", float(r["bcl34"])))
        entries.sort(key=lambda kv: kv[1])
        chain = " < ".join(f"{name} {val:g}" for name, val in entries)
        print(f"{r['lattice']}: {chain}  [smallest: {entries[0][0]}]")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="arbor",
        description="Spanning-forest counting and growth-constant bounds "
                    "on Archimedean lattice strips",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", help="count spanning forests (or CSSGs) of a graph file")
    sp.add_argument("--graph", required=True, help="edge-list file ('n e' header)")
    sp.add_argument("--cssg", action="store_true", help="count connected spanning subgraphs")
    sp.add_argument("--brute", action="store_true", help="use the enumeration oracle")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("tutte", help="Tutte polynomial of a graph file")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_tutte)

    sp = sub.add_parser("strip", help="emit a lattice strip as an edge list")
    sp.add_argument("--lattice", required=True)
    sp.add_argument("--width", type=int, required=True)
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--bc-t", dest="bc_t", choices=("free", "periodic"), default="free")
    sp.add_argument("--bc-l", dest="bc_l", choices=("free", "periodic"), default="free")
    sp.add_argument("--out", help="output path (default stdout)")
    sp.set_defaults(func=cmd_strip)

    sp = sub.add_parser("phi", help="growth constant of an infinite-length strip")
    sp.add_argument("--lattice", required=True)
    sp.add_argument("--width", type=int, required=True)
    sp.add_argument("--bc-t", dest="bc_t", choices=("free", "periodic"), default="free")
    sp.add_argument("--m-max", dest="m_max", type=int, default=40)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("bounds", help="bound families at a given degree")
    sp.add_argument("--delta", type=float)
    sp.add_argument("--crossover", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("table1", help="per-lattice phi, upper bound, ratio")
    sp.add_argument("--format", choices=("text", "csv", "json", "markdown"), default="text")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("table2", help="upper-bound comparison per lattice")
    sp.add_argument("--format", choices=("text", "csv", "json", "markdown"), default="text")
    sp.set_defaults(func=cmd_table2)

    sp = sub.add_parser("compare", help="rank all bounds per lattice")
    sp.add_argument("--delta", type=int)
    sp.set_defaults(func=cmd_compare)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    # bounds --delta is optional only when --crossover is given
    if args.command == "bounds" and args.delta is not None and args.delta <= 1:
        print("error: --delta must be > 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, LatticeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
