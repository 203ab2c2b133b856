"""Command line entry point: ``veronese-betti <command> --d D --m M ...``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch,
3 instance beyond the oracle cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import bounds
from .faces import DEFAULT_MAX_FACES, CapExceeded
from .homology import betti_numbers
from .lattice import Parameters, as_degree, enumerate_points, semigroup_member
from .svg import render_slice
from .theorems import ScanRow, classify_slice, predict_betti_numbers
from .verify import run_verification

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(args) -> Parameters:
    try:
        return Parameters(args.m, args.d)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))


def _caps(args) -> dict:
    return {"max_faces": args.max_faces}


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------

def cmd_points(args) -> int:
    params = _params(args)
    lines = [f"{i}: ({','.join(map(str, a))})" for i, a in enumerate(enumerate_points(params), 1)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    params = _params(args)
    if args.j_max < 1:
        raise UsageError("--j-max must be positive")
    table = bounds.bounds_table(params, args.j_max)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["j", "A_j", "l_tilde_j"])
        for row in table.rows:
            writer.writerow([row.j, row.A, "" if row.l_tilde is None else row.l_tilde])
        text = buf.getvalue()
    else:
        lines = [f"d={table.d} m={table.m}  (l~_j defined for j >= {table.j_threshold})",
                 f"{'j':>4} {'A_j':>6} {'l~_j':>6}"]
        for row in table.rows:
            lt = "-" if row.l_tilde is None else str(row.l_tilde)
            lines.append(f"{row.j:>4} {row.A:>6} {lt:>6}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_betti(args) -> int:
    params = _params(args)
    try:
        b = as_degree(args.b, params)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not semigroup_member(b, params):
        raise UsageError(f"{b} is not in the Veronese semigroup (|b| must be divisible by d)")
    j = sum(b) // params.d

    predicted = None
    if args.method in ("auto", "predict") and j > 0:
        predicted = predict_betti_numbers(b, params)
    oracle = None
    want_oracle = args.method == "oracle" or (
        args.method == "auto" and (predicted is None or args.check))
    if want_oracle:
        try:
            oracle = betti_numbers(b, params, **_caps(args))
        except CapExceeded as exc:
            if args.method == "oracle" or args.check:
                print(f"oracle infeasible: {exc}", file=sys.stderr)
                return EXIT_INFEASIBLE

    status = EXIT_OK
    records = []
    for p in range(j + 1):
        if predicted is not None:
            kind, values = predicted
            value, provenance = values[p], kind
            if oracle is not None:
                if oracle[p] != value:
                    provenance, status = "MISMATCH", EXIT_MISMATCH
                    value = oracle[p]
                else:
                    provenance += " (confirmed by oracle)"
        elif oracle is not None:
            value, provenance = oracle[p], "oracle"
        else:
            value, provenance = None, "unknown"
        records.append({"p": p, "value": value, "provenance": provenance})

    if args.format == "json":
        text = json.dumps({"b": list(b), "j": j, "betti": records}, indent=2) + "\n"
    else:
        lines = [f"b = ({','.join(map(str, b))})  j = {j}"]
        for r in records:
            value = "?" if r["value"] is None else r["value"]
            lines.append(f"beta_{r['p']} = {value}  [{r['provenance']}]")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return status


SCAN_FIELDS_TAIL = ["j", "p", "value", "classification", "provenance"]


def scan_rows_to_csv(rows: Sequence[ScanRow], m: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"b{t}" for t in range(m + 1)] + SCAN_FIELDS_TAIL)
    for r in rows:
        writer.writerow(list(r.b) + [r.j, r.p, "" if r.value is None else r.value,
                                     r.classification.value, r.provenance])
    return buf.getvalue()


def scan_rows_to_json(rows: Sequence[ScanRow], m: int) -> str:
    objs = []
    for r in rows:
        obj = {f"b{t}": x for t, x in enumerate(r.b)}
        obj.update(j=r.j, p=r.p, value=r.value,
                   classification=r.classification.value, provenance=r.provenance)
        objs.append(obj)
    return json.dumps(objs, indent=1) + "\n"


def cmd_scan(args) -> int:
    params = _params(args)
    if args.j < 1:
        raise UsageError("--j must be positive")
    p_list = args.p if args.p else [args.j - 1]
    if args.format == "svg" and (params.m != 2 or len(p_list) != 1):
        raise UsageError("svg output needs m = 2 and a single --p")
    rows = classify_slice(params, args.j, p_list, check=args.check,
                          workers=args.workers, **_caps(args))
    if args.format == "csv":
        text = scan_rows_to_csv(rows, params.m)
    elif args.format == "json":
        text = scan_rows_to_json(rows, params.m)
    else:
        l_tilde = None
        if args.j >= bounds.lower_threshold(params):
            l_tilde = bounds.compute_l_tilde(params, args.j)
        text = render_slice(rows, params.d, args.j, p_list[0],
                            bounds.compute_A(params, args.j), l_tilde)
    _emit(text, args.out)
    if any(r.provenance == "MISMATCH" for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _params(args)
    report = run_verification(params, args.j_max, args.p_max, **_caps(args))
    lines = report.lines()
    lines.append("all confirmed" if report.ok else "VERIFICATION FAILED")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="veronese-betti",
                     description="Multigraded Betti numbers of Veronese embeddings of P^m.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt=None):
        p.add_argument("--d", type=int, required=True, help="Veronese degree (>= 2)")
        p.add_argument("--m", type=int, default=2, help="projective dimension (>= 2)")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--max-faces", type=int, default=DEFAULT_MAX_FACES,
                       help="face enumeration cap for the oracle")
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("points", help="list the generators in lex order")
    common(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("bounds", help="table of A_j and l~_j")
    common(p, ["text", "csv"])
    p.add_argument("--j-max", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("betti", help="all beta_{p,b} for one degree")
    common(p, ["text", "json"])
    p.add_argument("--b", type=_ints, required=True, help="comma-separated coordinates")
    p.add_argument("--method", choices=["auto", "oracle", "predict"], default="auto")
    p.add_argument("--check", action="store_true", help="confirm predictions with the oracle")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("scan", help="classify every degree on a slice |b| = d*j")
    common(p, ["csv", "json", "svg"])
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--p", type=_ints, help="homological degrees (default j-1)")
    p.add_argument("--check", action="store_true", help="confirm predictions with the oracle")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="cross-check all theorems against the oracle")
    common(p)
    p.add_argument("--j-max", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"veronese-betti: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"veronese-betti: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
