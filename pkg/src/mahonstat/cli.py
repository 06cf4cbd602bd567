"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 output I/O error.  Integers and rationals are written as decimal strings
("p/q" for rationals) so nothing passes through floating point.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import approx, moments, verify
from .errors import DegenerateDistribution, InvalidArgument
from .mahonian import build

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _num(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with floats printed to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}"
                 for k, v in obj.items())
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = (pad + dumps(v, indent, _level + 1) for v in obj)
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    return json.dumps(obj)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else _num(v) if isinstance(v, float) else str(v)
                    for v in row])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _dist(parts):
    try:
        return build(parts)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from exc


def cmd_dist(args) -> str:
    d = _dist(args.parts)
    if args.format == "csv":
        return _csv(["k", "coefficient"], enumerate(d.coeffs.coeffs))
    return dumps({
        "parts": list(d.comp.parts),
        "total": str(d.total),
        "mu": str(d.mu),
        "sigma2": str(d.sigma2),
        "coefficients": [str(c) for c in d.coeffs.coeffs],
    })


def cmd_moments(args) -> str:
    d = _dist(args.parts)
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    try:
        table = moments.moment_table(d, args.order, args.method)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        return _csv(["r", "central", "binomial"],
                    ((r, table.central[r], table.binomial[r]) for r in range(args.order + 1)))
    return dumps({
        "parts": list(d.comp.parts),
        "order": args.order,
        "method": args.method,
        "central": {f"mu{r}": str(v) for r, v in enumerate(table.central)},
        "binomial": {f"A{r}": str(v) for r, v in enumerate(table.binomial)},
    })


def cmd_approx(args) -> str:
    d = _dist(args.parts)
    try:
        if args.k is not None:
            g = approx.gaussian_pmf(d, args.k)
            result = {
                "parts": list(d.comp.parts),
                "k": args.k,
                "count": str(d.count(args.k)),
                "total": str(d.total),
                "pmf": d.pmf_float(args.k),
                "pmf_exact": str(d.pmf(args.k)),
                "gaussian": g,
                "edgeworth": approx.edgeworth_pmf(d, args.k),
                "approx_count": g * float(d.total),
            }
        else:
            rep = approx.local_limit_report(d, per_k=args.per_k, continuity=args.continuity)
            result = {
                "parts": list(d.comp.parts),
                "mu": str(d.mu),
                "sigma2": str(d.sigma2),
                "abar": d.comp.abar,
                "sup_abs_error": rep.sup_abs_error,
                "scaled_llt_error": rep.scaled_llt_error,
                "kolmogorov": rep.kolmogorov,
            }
            if rep.per_k is not None:
                result["per_k"] = [list(row) for row in rep.per_k]
    except DegenerateDistribution as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        scalars = [(k, v) for k, v in result.items() if not isinstance(v, list)]
        return _csv(["key", "value"], scalars)
    return dumps(result)


def cmd_logconcave(args) -> str:
    try:
        if args.table is not None:
            rows = approx.paper_table(args.table)
        elif args.parts:
            if args.range is None:
                raise UsageError("--parts needs --range LO HI")
            rows = approx.logconcavity_scan(_dist(args.parts), *args.range)
        else:
            raise UsageError("give either --table NMAX or --parts ... --range LO HI")
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        return _csv(["n", "j", "delta"], ((r.n, r.j, r.delta) for r in rows))
    return dumps({"rows": [{"n": r.n, "j": r.j, "delta": str(r.delta)} for r in rows]})


def cmd_cf(args) -> str:
    d = _dist(args.parts)
    rows = [(theta, approx.characteristic_modulus(d, theta)) for theta in args.theta]
    if args.format == "csv":
        return _csv(["theta", "modulus"], rows)
    return dumps({"parts": list(d.comp.parts),
                  "values": [{"theta": t, "modulus": m} for t, m in rows]})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahonstat",
        description="Exact and approximate inversion-count distributions on words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parts_positional=True):
        if parts_positional:
            p.add_argument("parts", nargs="+", type=int, help="letter multiplicities a_1 ... a_m")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="PATH", default=None, help="write to PATH instead of stdout")

    p = sub.add_parser("dist", help="exact coefficient vector, mean and variance")
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("moments", help="central and binomial moments")
    common(p)
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--method", choices=("exact", "recurrence"), default="exact")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("approx", help="normal/Edgeworth approximation and error report")
    common(p)
    p.add_argument("--k", type=int, default=None, help="evaluate at a single inversion count")
    p.add_argument("--per-k", action="store_true", help="include the per-k table in the report")
    p.add_argument("--continuity", action="store_true",
                   help="continuity-corrected Kolmogorov distance")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("logconcave", help="log-concavity gaps c_j^2 - c_{j-1} c_{j+1}")
    common(p, parts_positional=False)
    p.add_argument("--table", type=int, metavar="NMAX", default=None)
    p.add_argument("--parts", type=int, nargs="+", default=None)
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"), default=None)
    p.set_defaults(func=cmd_logconcave)

    p = sub.add_parser("cf", help="modulus of the characteristic function")
    common(p)
    p.add_argument("--theta", type=float, nargs="+", required=True)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("scope", choices=sorted(verify.SUITES))
    p.set_defaults(func=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "verify":
        ok = True
        for check in verify.SUITES[args.scope]:
            result = check()
            print(result.line(), flush=True)
            ok &= result.ok
        return EXIT_OK if ok else EXIT_VERIFY

    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"mahonstat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"mahonstat {args.command}: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK
