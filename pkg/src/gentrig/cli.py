"""Command-line front end for gentrig.

Commands
--------
eval     forward function value with error bound
const    pi_p, a_p, b_p or pi_{p,q}
invert   sin_p, cos_p, tan_p, sinh_p, tanh_p
verify   run a verification suite (``--all-theorems`` for the bundle)
scan     run a conjecture suite (``--all-conjectures`` for the bundle)
table    CSV of values over parameter/argument grids

Exit codes: 0 success, 1 theorem suite failed, 2 usage or domain error,
3 numerical convergence failure.  ``GENTRIG_ABS_TOL`` and
``GENTRIG_REL_TOL`` override the default tolerances; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Dict, List, Optional, Sequence

from . import __version__, analysis, inverse, ptrig
from .core import (
    PQ,
    ConfigurationError,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    Eval,
    EvalOptions,
    FamilyId,
    GenTrigError,
    IllConditionedError,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

CSV_HEADER = ["x", "p", "q", "value", "err"]

_NUM = {"type": ["number", "string"]}
_RECORD_SCHEMA = {
    "type": "object",
    "required": ["point", "lhs", "rhs", "margin"],
    "properties": {
        "point": {"type": "object"},
        "lhs": _NUM,
        "rhs": _NUM,
        "margin": _NUM,
        "tol": _NUM,
        "status": {"enum": ["ok", "indeterminate", "counterexample"]},
    },
}
REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["meta", "records", "min_margin", "argmin", "counterexamples", "pass",
                 "conjecture"],
    "properties": {
        "meta": {
            "type": "object",
            "required": ["suite", "grids", "tolerances", "version"],
            "properties": {
                "suite": {"type": "string"},
                "grids": {"type": "object"},
                "tolerances": {"type": "object"},
                "version": {"type": "string"},
            },
        },
        "records": {"type": "array", "items": _RECORD_SCHEMA},
        "min_margin": _NUM,
        "argmin": {"type": ["object", "null"]},
        "counterexamples": {"type": "array", "items": _RECORD_SCHEMA},
        "pass": {"type": "boolean"},
        "conjecture": {"type": "boolean"},
    },
}
EVAL_SCHEMA = {
    "type": "object",
    "required": ["family", "x", "p", "q", "value", "err", "path"],
    "properties": {
        "family": {"type": "string"},
        "x": {"type": ["number", "null"]},
        "p": {"type": "number"},
        "q": {"type": ["number", "null"]},
        "value": {"type": "number"},
        "err": {"type": "number"},
        "path": {"type": "string"},
    },
}

CONSTANTS = {"pi_p": FamilyId.PiP, "a_p": None, "b_p": FamilyId.BP, "pi_pq": FamilyId.PiPQ}


class UsageError(Exception):
    """Bad flag combination detected after argparse."""


# --------------------------------------------------------------------------
# options and serialization
# --------------------------------------------------------------------------

def _env_float(name: str) -> Optional[float]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{name} must be a number, got {raw!r}") from None


def build_options(args) -> EvalOptions:
    abs_tol = args.abs_tol if args.abs_tol is not None else _env_float("GENTRIG_ABS_TOL")
    rel_tol = args.rel_tol if args.rel_tol is not None else _env_float("GENTRIG_REL_TOL")
    kw = {}
    if abs_tol is not None:
        kw["abs_tol"] = abs_tol
    if rel_tol is not None:
        kw["rel_tol"] = rel_tol
    return EvalOptions(**kw)


def _tolerances(opts: EvalOptions) -> Dict[str, float]:
    return {"abs_tol": opts.abs_tol, "rel_tol": opts.rel_tol,
            "margin_factor": analysis.TOL_FACTOR, "slack": analysis.SLACK}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _g17(v: Optional[float]) -> str:
    return "" if v is None else "%.17g" % v


def _csv_text(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def _eval_row(x, p, q, e: Eval) -> List[str]:
    return [_g17(x), _g17(p), _g17(q), _g17(e.value), _g17(e.err)]


def _eval_payload(family: str, x, p, q, e: Eval) -> dict:
    return {"family": family, "x": x, "p": p, "q": q, "value": e.value, "err": e.err,
            "path": e.path.value}


def _render_eval(fmt: str, family: str, x, p, q, e: Eval) -> str:
    if fmt == "json":
        return _dumps(_eval_payload(family, x, p, q, e))
    if fmt == "csv":
        return _csv_text([_eval_row(x, p, q, e)])
    args = [f"{k}={v!r}" for k, v in (("x", x), ("p", p), ("q", q)) if v is not None]
    return f"{family}({', '.join(args)}) = {e.value!r} +/- {e.err:.3g} [{e.path.value}]\n"


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _family(name: str, allowed) -> FamilyId:
    try:
        fam = FamilyId.parse(name)
    except (ValueError, KeyError, GenTrigError):
        raise UsageError(f"unknown family {name!r}") from None
    if not allowed(fam):
        raise UsageError(f"family {name!r} is not valid for this command")
    return fam


def _forward_value(fam: FamilyId, x, p, q, path, opts) -> Eval:
    if fam.two_parameter and q is None:
        raise UsageError(f"{fam.value} needs --q")
    if not fam.two_parameter and q is not None:
        raise UsageError(f"{fam.value} takes no --q")
    pq = PQ(p, q if q is not None else p)
    return ptrig.evaluate(fam, x, pq, path=path, opts=opts)


def run_eval(args, opts) -> tuple:
    fam = _family(args.family, lambda f: not f.is_constant and not f.is_inverse)
    if args.x is None:
        raise UsageError("eval needs --x")
    e = _forward_value(fam, args.x, args.p, args.q, args.path, opts)
    return _render_eval(args.format, fam.value, args.x, args.p, args.q, e), EXIT_OK


def _constant_value(name: str, p, q, verify: bool, opts) -> Eval:
    if name == "pi_pq":
        if q is None:
            raise UsageError("pi_pq needs --q")
        return ptrig.pi_pq(PQ(p, q), verify=verify, opts=opts)
    if q is not None:
        raise UsageError(f"{name} takes no --q")
    func = {"pi_p": ptrig.pi_p, "a_p": ptrig.a_p, "b_p": ptrig.b_p}[name]
    return func(p, verify=verify, opts=opts)


def run_const(args, opts) -> tuple:
    e = _constant_value(args.name, args.p, args.q, args.verify, opts)
    q = args.q if args.name == "pi_pq" else None
    return _render_eval(args.format, args.name, None, args.p, q, e), EXIT_OK


def run_invert(args, opts) -> tuple:
    fam = _family(args.family, lambda f: f.is_inverse)
    e = inverse.invert(fam, args.y, args.p, opts)
    return _render_eval(args.format, fam.value, args.y, args.p, None, e), EXIT_OK


def _report_payload(report: analysis.ScanReport, opts) -> dict:
    data = report.to_dict()
    meta = data["meta"]
    meta.setdefault("grids", {})
    meta["tolerances"] = _tolerances(opts)
    meta["version"] = __version__
    return data


def _render_reports(fmt: str, reports: List[analysis.ScanReport], opts, bundle: Optional[str]):
    if fmt == "csv":
        raise UsageError("reports are emitted as json or text; csv is for eval/const/invert/table")
    if fmt == "text":
        lines = []
        for r in reports:
            status = "PASS" if r.passed else ("FAIL (conjecture)" if r.conjecture else "FAIL")
            lines.append(f"{r.suite:34s} {status:18s} records={len(r.records):5d} "
                         f"min_margin={r.min_margin:.6g} indeterminate={len(r.indeterminate)} "
                         f"counterexamples={len(r.counterexamples)}")
        return "\n".join(lines) + "\n"
    payloads = [_report_payload(r, opts) for r in reports]
    if bundle is None:
        return _dumps(payloads[0])
    return _dumps({
        "meta": {"bundle": bundle, "tolerances": _tolerances(opts), "version": __version__},
        "reports": payloads,
        "pass": all(r.passed for r in reports if not r.conjecture),
    })


def _run_suites(args, opts, bundle_flag: bool, bundle_name: str, kind: str) -> tuple:
    x_grid = analysis.Grid.parse(args.x_grid) if args.x_grid else None
    s_grid = analysis.Grid.parse(args.s_grid) if args.s_grid else None
    if bundle_flag:
        if args.suite:
            raise UsageError(f"--suite and --{bundle_name} are exclusive")
        if x_grid or s_grid:
            raise UsageError("grid overrides apply to single suites only")
        names = analysis.suite_names(kind)
        bundle = bundle_name
    elif args.suite:
        names, bundle = [args.suite], None
        if args.suite not in analysis.suite_names():
            raise UsageError(f"unknown suite {args.suite!r}; "
                             f"choose from {', '.join(analysis.suite_names())}")
    else:
        raise UsageError(f"give --suite NAME or --{bundle_name}")
    reports = [analysis.run_suite(n, opts, x_grid, s_grid) for n in names]
    failed = any(not r.passed and not r.conjecture for r in reports)
    return _render_reports(args.format, reports, opts, bundle), EXIT_FAIL if failed else EXIT_OK


def run_verify(args, opts) -> tuple:
    return _run_suites(args, opts, args.all_theorems, "all-theorems", "theorem")


def run_scan(args, opts) -> tuple:
    return _run_suites(args, opts, args.all_conjectures, "all-conjectures", "conjecture")


def _axis(value, grid_text, name) -> List[Optional[float]]:
    if value is not None and grid_text is not None:
        raise UsageError(f"give --{name} or --{name}-grid, not both")
    if grid_text is not None:
        return list(analysis.Grid.parse(grid_text).points())
    return [value]


def run_table(args, opts) -> tuple:
    name = args.family
    if name in CONSTANTS:
        kind = "const"
    else:
        fam = _family(name, lambda f: not f.is_constant)
        kind = "inverse" if fam.is_inverse else "forward"
    ps = _axis(args.p, args.p_grid, "p")
    qs = _axis(args.q, args.q_grid, "q")
    xs = _axis(args.x, args.x_grid, "x")
    if ps == [None]:
        raise UsageError("table needs --p or --p-grid")
    if kind == "const" and xs != [None]:
        raise UsageError(f"{name} is a constant; it takes no x")
    if kind != "const" and xs == [None]:
        raise UsageError("table needs --x or --x-grid")
    rows, payload = [], []
    for p in ps:
        for q in qs:
            for x in xs:
                if kind == "const":
                    e = _constant_value(name, p, q, False, opts)
                elif kind == "inverse":
                    if q is not None:
                        raise UsageError(f"{name} takes no --q")
                    e = inverse.invert(fam, x, p, opts)
                else:
                    e = _forward_value(fam, x, p, q, None, opts)
                rows.append(_eval_row(x, p, q, e))
                payload.append(_eval_payload(name, x, p, q, e))
    if args.format == "json":
        return _dumps(payload), EXIT_OK
    if args.format == "text":
        return "\n".join(" ".join(f"{v:>24s}" for v in r) for r in [CSV_HEADER] + rows) + "\n", \
            EXIT_OK
    return _csv_text(rows), EXIT_OK


# --------------------------------------------------------------------------
# parser and entry point
# --------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--abs-tol", type=float, default=None, help="absolute tolerance")
    p.add_argument("--rel-tol", type=float, default=None, help="relative tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentrig", description="Generalized trigonometric functions and their inequalities.")
    parser.add_argument("--version", action="version", version=f"gentrig {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a forward function")
    p.add_argument("--family", required=True,
                   help="arcsin_p, arccos_p, arctan_p, arcsinh_p, arctanh_p, arcsin_pq, arcsinh_pq")
    p.add_argument("--x", type=float)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float)
    p.add_argument("--path", choices=("auto", "series", "quadrature"), default="auto")
    _common(p, "json")

    p = sub.add_parser("const", help="evaluate pi_p, a_p, b_p or pi_pq")
    p.add_argument("--name", required=True, choices=sorted(CONSTANTS))
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float)
    p.add_argument("--verify", action="store_true", help="cross-check all evaluation paths")
    _common(p, "json")

    p = sub.add_parser("invert", help="evaluate an inverse function")
    p.add_argument("--family", required=True, help="sin_p, cos_p, tan_p, sinh_p, tanh_p")
    p.add_argument("--y", "--x", dest="y", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    _common(p, "json")

    for name, bundle, helptext in (("verify", "--all-theorems", "run verification suites"),
                                   ("scan", "--all-conjectures", "run conjecture scans")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--suite")
        p.add_argument(bundle, action="store_true")
        p.add_argument("--x-grid", help="lo:hi:n[@log] (Turan suites)")
        p.add_argument("--s-grid", help="lo:hi:n[@log] (Turan suites)")
        p.add_argument("--list", action="store_true", help="list suite names and exit")
        _common(p, "json")

    p = sub.add_parser("table", help="CSV table over grids")
    p.add_argument("--family", required=True)
    for axis in ("x", "p", "q"):
        p.add_argument(f"--{axis}", type=float)
        p.add_argument(f"--{axis}-grid", help="lo:hi:n[@log]")
    _common(p, "csv")
    return parser


_COMMANDS = {
    "eval": run_eval,
    "const": run_const,
    "invert": run_invert,
    "verify": run_verify,
    "scan": run_scan,
    "table": run_table,
}


def _error(kind: str, exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "list", False):
        kind = "theorem" if args.command == "verify" else "conjecture"
        sys.stdout.write("\n".join(analysis.suite_names(kind)) + "\n")
        return EXIT_OK
    try:
        opts = build_options(args)
        text, code = _COMMANDS[args.command](args, opts)
    except (UsageError, ConfigurationError) as exc:
        return _error("usage", exc, EXIT_USAGE)
    except DomainError as exc:
        return _error(type(exc).__name__, exc, EXIT_USAGE)
    except (ConvergenceError, ConsistencyError, IllConditionedError) as exc:
        return _error(type(exc).__name__, exc, EXIT_NUMERIC)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
