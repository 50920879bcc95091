"""Command-line front end.

Subcommands: area (surface area of an ellipsoid), integral (evaluate any
catalog identity by id, closed form and/or quadrature oracle), series (the
sigma sums with their closed references), verify (run the verification
suites and write machine-readable reports).

Exit codes: 0 success / comparison passed, 1 a verification comparison
failed, 2 usage or domain error, 3 quadrature or series non-convergence.
"""

import argparse
import json
import math
import sys

from ._version import __version__
from .errors import DomainError, NonConvergenceError
from .geometry import (surface_area, surface_area_ascending,
                       surface_area_legendre)
from .identities import REGISTRY, IdentityId, check, closed_value, \
    make_record, oracle_value
from .quadrature import surface_area_quadrature
from .series import MAX_TERMS_DEFAULT, sigma1_sum, sigma2_sum
from .verify import (AREA_QUAD_TOL, SERIES_SUM_TOL, SUITES, _record_dict,
                     report_json, run_suite, sigma1_reference,
                     sigma2_reference, write_report)

_PARAM_FLAGS = ("alpha", "beta", "e1", "e2", "eps", "f1", "f2", "k", "kbar",
                "mu", "nu", "psi", "xi", "z")


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    return "%.15g" % x


def _axes(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected three comma-separated axes, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric axis in {text!r}")


def _single_report(tolerances: dict, records: list) -> str:
    payload = {
        "meta": {"version": __version__, "tolerances": tolerances,
                 "grid": None},
        "records": [_record_dict(r) for r in records],
    }
    return json.dumps(payload, indent=2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellint",
        description="ellipsoid surface areas and verified elliptic-integral "
                    "identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("area", help="surface area of an ellipsoid")
    p.add_argument("--axes", type=_axes, required=True, metavar="A,B,C",
                   help="semi-axes, comma separated")
    p.add_argument("--method", default="auto",
                   choices=("auto", "legendre", "ascending", "quadrature"))
    p.add_argument("--tol", type=float, default=1e-9,
                   help="relative tolerance for --method quadrature")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("integral", help="evaluate a catalog identity by id")
    p.add_argument("--id", required=True, dest="ident",
                   choices=[i.value for i in IdentityId])
    for flag in _PARAM_FLAGS:
        p.add_argument(f"--{flag}", type=float)
    p.add_argument("--mode", default="both",
                   choices=("closed", "oracle", "both"))
    p.add_argument("--tol", type=float, default=1e-8,
                   help="relative comparison tolerance in both mode")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("series", help="evaluate a sigma series sum")
    p.add_argument("--id", required=True, dest="ident",
                   choices=("SIGMA1", "SIGMA2"))
    p.add_argument("--e1", type=float, required=True)
    p.add_argument("--e2", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-15,
                   help="relative term-size termination threshold")
    p.add_argument("--max-terms", type=int, default=MAX_TERMS_DEFAULT)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--grid", type=int, default=5)
    p.add_argument("--tol", type=float, default=1e-8,
                   help="relative tolerance for the identity sweep")
    p.add_argument("--out", help="write the report to this path")
    p.add_argument("--format", default="json", choices=("json", "csv"))
    p.add_argument("--json", action="store_true",
                   help="print the full report instead of a summary")
    return parser


def _run_area(args) -> int:
    a, b, c = args.axes
    if args.method == "auto":
        value, record = surface_area(a, b, c), None
    elif args.method == "legendre":
        value, record = surface_area_legendre(a, b, c), None
    elif args.method == "ascending":
        value, record = surface_area_ascending(a, b, c), None
    else:
        value = surface_area_quadrature(a, b, c, args.tol).value
        record = make_record("AREA_VS_QUADRATURE",
                             {"a": a, "b": b, "c": c},
                             surface_area(a, b, c), value, AREA_QUAD_TOL)
    if args.json:
        params = {"a": a, "b": b, "c": c, "method": args.method}
        if record is None:
            record = make_record("AREA", params, value, value, AREA_QUAD_TOL)
        else:
            record = make_record("AREA_VS_QUADRATURE", params, record.closed,
                                 record.oracle, AREA_QUAD_TOL)
        print(_single_report({"area_vs_quadrature_rel": AREA_QUAD_TOL},
                             [record]))
    else:
        print(_fmt(value))
    return 0


def _build_params(ident: IdentityId, args):
    entry = REGISTRY[ident]
    given = {f for f in _PARAM_FLAGS if getattr(args, f) is not None}
    needed = set(entry.flags)
    if given != needed:
        missing = sorted(needed - given)
        extra = sorted(given - needed)
        bits = []
        if missing:
            bits.append("missing " + " ".join(f"--{f}" for f in missing))
        if extra:
            bits.append("unexpected " + " ".join(f"--{f}" for f in extra))
        raise DomainError(f"{ident.value} takes exactly "
                          + " ".join(f"--{f}" for f in entry.flags)
                          + " (" + "; ".join(bits) + ")")
    return entry.params_cls(**{f: getattr(args, f) for f in entry.flags})


def _run_integral(args) -> int:
    ident = IdentityId(args.ident)
    params = _build_params(ident, args)
    if args.mode == "closed":
        rec = None
        value = closed_value(ident, params)
    elif args.mode == "oracle":
        rec = None
        value = oracle_value(ident, params).value
    else:
        rec = check(ident, params, args.tol)
    if args.json:
        if rec is None:
            pdict = {f: getattr(args, f) for f in REGISTRY[ident].flags}
            rec = make_record(ident.value, pdict, value, value, args.tol)
        print(_single_report({"identity_rel": args.tol,
                              "near_zero_abs": 1e-12}, [rec]))
    elif rec is None:
        print(_fmt(value))
    else:
        print("%-11s %s" % ("closed", _fmt(rec.closed)))
        print("%-11s %s" % ("oracle", _fmt(rec.oracle)))
        print("%-11s %s" % ("abs_err", _fmt(rec.abs_err)))
        print("%-11s %s" % ("rel_err", _fmt(rec.rel_err)))
        print("%-11s %s" % ("pass", "true" if rec.passed else "false"))
    if rec is not None and not rec.passed:
        return 1
    return 0


def _run_series(args) -> int:
    if args.ident == "SIGMA1":
        res = sigma1_sum(args.e1, args.e2, args.tol, args.max_terms)
        ref = sigma1_reference(args.e1, args.e2)
    else:
        res = sigma2_sum(args.e1, args.e2, args.tol, args.max_terms)
        ref = sigma2_reference(args.e1, args.e2)
    rec = make_record(args.ident, {"e1": args.e1, "e2": args.e2},
                      res.value, ref, SERIES_SUM_TOL)
    if args.json:
        print(_single_report({"series_sum_rel": SERIES_SUM_TOL,
                              "near_zero_abs": 1e-12}, [rec]))
    else:
        print("%-11s %s" % ("sum", _fmt(res.value)))
        print("%-11s %d" % ("terms_used", res.terms_used))
        print("%-11s %s" % ("reference", _fmt(ref)))
        print("%-11s %s" % ("abs_err", _fmt(rec.abs_err)))
        print("%-11s %s" % ("rel_err", _fmt(rec.rel_err)))
        print("%-11s %s" % ("pass", "true" if rec.passed else "false"))
    return 0 if rec.passed else 1


def _run_verify(args) -> int:
    if args.grid < 2:
        raise DomainError(f"--grid must be at least 2, got {args.grid}")
    report = run_suite(args.suite, args.grid, args.tol)
    if args.out:
        write_report(report, args.out, args.format)
    if args.json:
        print(report_json(report), end="")
    else:
        npass = sum(1 for r in report.records if r.passed)
        nfail = len(report.records) - npass
        print(f"suite {args.suite}: {len(report.records)} records, "
              f"{npass} passed, {nfail} failed")
        for r in report.failures():
            print("FAIL", r.ident, json.dumps(r.params, sort_keys=True),
                  "closed=" + _fmt(r.closed), "oracle=" + _fmt(r.oracle),
                  "rel_err=" + _fmt(r.rel_err))
    return 0 if report.all_passed else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "area":
            return _run_area(args)
        if args.command == "integral":
            return _run_integral(args)
        if args.command == "series":
            return _run_series(args)
        return _run_verify(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
