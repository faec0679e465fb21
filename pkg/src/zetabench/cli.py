"""Command-line front end: compute constants, verify identities, report.

    zetabench compute gamma --n 0..5 --route all
    zetabench verify --suite all --tol 1e-8 --output json
    zetabench report --out report.json

verify exits 0 when every row passes, 1 when any fails, 2 on usage errors.
Unknown catalog ids are rejected before any computation starts.  Identity
evaluations are dispatched to a bounded pool of worker processes; rows are
assembled sorted by id, so reports do not depend on the parallelism level.
Numeric fields are serialized as decimal strings at working precision.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import signal
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from mpmath import mp, mpf

from . import constants, identities
from .precision import ENV_DIGITS, PrecisionConfig

_SEQ_NAMES = {
    "gamma": "stieltjes",
    "stieltjes": "stieltjes",
    "eta": "eta",
    "sigma": "sigma",
    "lehmer-b": "lehmer_b",
    "b": "lehmer_b",
    "d-n": "d_n",
    "d": "d_n",
    "zeta-deriv0": "zeta_deriv0",
    "zeta-deriv": "zeta_deriv0",
}

_ROW_FIELDS = ("id", "description", "lhs", "rhs", "abs_err", "rel_err",
               "tol", "pass", "evaluations", "elapsed_ms")


class UsageError(Exception):
    pass


def _parse_indices(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty index specification {text!r}")
    return out


def _config_from(args) -> PrecisionConfig:
    digits = args.digits
    if digits is None:
        env = os.environ.get(ENV_DIGITS)
        digits = int(env) if env else 40
    try:
        return PrecisionConfig(working_digits=digits)
    except ValueError as e:
        raise UsageError(str(e))


def _nstr(value, cfg: PrecisionConfig) -> str:
    with cfg.workdps():
        if value is None or mp.isnan(mpf(value)):
            return "nan"
        return mp.nstr(mpf(value), cfg.working_digits)


class _Timeout(Exception):
    pass


def _alarm_handler(signum, frame):
    raise _Timeout()


def _run_task(payload: dict) -> dict:
    """Evaluate one identity or structural check; never raises."""
    kind = payload["kind"]
    rid = payload["id"]
    cfg = PrecisionConfig(working_digits=payload["digits"])
    timeout_s = payload["timeout_s"]
    t0 = time.monotonic()
    old = None
    try:
        if timeout_s and hasattr(signal, "SIGALRM"):
            old = signal.signal(signal.SIGALRM, _alarm_handler)
            signal.alarm(int(timeout_s))
        if kind == "identity":
            r = identities.evaluate_identity(rid, None, payload["tol"], cfg)
            desc = identities.catalog()[rid].description
            row = {
                "id": rid,
                "description": desc,
                "lhs": _nstr(r.lhs_value, cfg),
                "rhs": _nstr(r.rhs_value, cfg),
                "abs_err": _nstr(r.abs_err, cfg),
                "rel_err": _nstr(r.rel_err, cfg),
                "tol": _nstr(r.tol, cfg),
                "pass": r.passed,
                "evaluations": r.evaluations,
            }
        else:
            checks = constants.run_structure_checks(
                payload["max_n"], payload["tol"], cfg, only={rid})
            c = checks[0]
            with cfg.workdps():
                scale = max(abs(c.lhs_value), abs(c.rhs_value),
                            mpf(10) ** (-cfg.working_digits))
                rel = abs(c.abs_err) / scale
            row = {
                "id": c.id,
                "description": c.description + (f" [{c.detail}]" if c.detail else ""),
                "lhs": _nstr(c.lhs_value, cfg),
                "rhs": _nstr(c.rhs_value, cfg),
                "abs_err": _nstr(c.abs_err, cfg),
                "rel_err": _nstr(rel, cfg),
                "tol": _nstr(mpf(payload["tol"]), cfg),
                "pass": c.passed,
                "evaluations": c.evaluations,
            }
    except _Timeout:
        row = _failed_row(rid, f"timed out after {timeout_s} s")
    except Exception as e:  # surfaced as a failed row, never a crash
        row = _failed_row(rid, f"{type(e).__name__}: {e}")
    finally:
        if old is not None:
            signal.alarm(0)
            signal.signal(signal.SIGALRM, old)
    row["elapsed_ms"] = int((time.monotonic() - t0) * 1000)
    return row


def _failed_row(rid: str, note: str) -> dict:
    return {
        "id": rid,
        "description": f"evaluation failed [{note}]",
        "lhs": "nan",
        "rhs": "nan",
        "abs_err": "nan",
        "rel_err": "nan",
        "tol": "nan",
        "pass": False,
        "evaluations": 0,
    }


def _resolve_suite(suite: str, max_n: int) -> list[dict]:
    catalog_ids = identities.catalog_ids()
    check_ids = constants.structure_check_ids(max_n)
    if suite == "all":
        wanted = catalog_ids + check_ids
    else:
        wanted = [s.strip() for s in suite.split(",") if s.strip()]
        if not wanted:
            raise UsageError("empty suite selection")
    tasks = []
    for rid in wanted:
        if rid in identities.ALIASES or rid in identities.catalog():
            tasks.append({"kind": "identity", "id": identities.resolve_id(rid)})
        elif rid in check_ids:
            tasks.append({"kind": "check", "id": rid})
        else:
            raise UsageError(f"unknown suite id {rid!r}")
    return tasks


def run_verify(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    cfg = _config_from(args)
    with cfg.workdps():
        tol = mpf(args.tol)
        if tol < cfg.min_tolerance():
            raise UsageError(
                f"tolerance {args.tol} below resolution for "
                f"{cfg.working_digits} working digits")
    tasks = _resolve_suite(args.suite, args.max_n)
    for t in tasks:
        t.update(tol=args.tol, digits=cfg.working_digits,
                 timeout_s=args.timeout_s, max_n=args.max_n)

    if args.parallelism <= 1:
        rows = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.parallelism) as pool:
            rows = list(pool.map(_run_task, tasks))
    rows.sort(key=lambda r: r["id"])

    report = {
        "suite": args.suite,
        "tolerance": args.tol,
        "precision_digits": cfg.working_digits,
        "results": rows,
        "summary": {
            "total": len(rows),
            "passed": sum(1 for r in rows if r["pass"]),
            "failed": sum(1 for r in rows if not r["pass"]),
        },
    }
    _emit_report(report, args.output, out)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            _emit_report(report, "json", fh)
    return 0 if report["summary"]["failed"] == 0 else 1


def _emit_report(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(_ROW_FIELDS)
        for r in report["results"]:
            w.writerow([r[f] for f in _ROW_FIELDS])
    else:
        res = report["results"]
        out.write(f"suite {report['suite']} at tol {report['tolerance']}, "
                  f"{report['precision_digits']} digits\n")
        for r in res:
            mark = "PASS" if r["pass"] else "FAIL"
            out.write(f"{mark}  {r['id']:<20} abs_err {r['abs_err']:<14} "
                      f"evals {r['evaluations']:<7} {r['elapsed_ms']} ms\n")
        s = report["summary"]
        out.write(f"total {s['total']}  passed {s['passed']}  "
                  f"failed {s['failed']}\n")


def run_compute(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    cfg = _config_from(args)
    name = args.sequence.lower()
    if name not in _SEQ_NAMES:
        raise UsageError(f"unknown sequence {args.sequence!r}; choose from "
                         f"{sorted(set(_SEQ_NAMES))}")
    tag = _SEQ_NAMES[name]
    indices = _parse_indices(args.n)
    route = args.route
    if route is not None and route != "all":
        valid = (constants.STIELTJES_ROUTES if tag == "stieltjes"
                 else constants.ZETA_DERIV0_ROUTES if tag == "zeta_deriv0"
                 else (tag,))
        if route not in valid:
            raise UsageError(f"unknown route {route!r} for {tag}; "
                             f"choose from {list(valid)}")
    try:
        seq = constants.constant_sequence(tag, indices, route, cfg)
    except (ValueError, KeyError) as e:
        raise UsageError(str(e))

    if args.output == "json":
        doc = {
            "tag": seq.tag,
            "precision_digits": cfg.working_digits,
            "entries": [
                {"index": e.index, "route": e.route,
                 "value": _nstr(e.value, cfg),
                 "err_estimate": _nstr(e.err_estimate, cfg)}
                for e in seq.entries
            ],
        }
        json.dump(doc, out, indent=2, sort_keys=True)
        out.write("\n")
    elif args.output == "csv":
        w = csv.writer(out)
        w.writerow(["index", "route", "value", "err_estimate"])
        for e in seq.entries:
            w.writerow([e.index, e.route, _nstr(e.value, cfg),
                        _nstr(e.err_estimate, cfg)])
    else:
        out.write(f"{seq.tag} at {cfg.working_digits} digits\n")
        for e in seq.entries:
            out.write(f"n={e.index:<3} {e.route:<16} {_nstr(e.value, cfg):<50} "
                      f"(~{_nstr(e.err_estimate, cfg)})\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetabench",
        description="precision workbench for zeta derivatives and "
                    "Stieltjes-family constants")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--digits", type=int, default=None,
                        help="significant working digits (env ZETA_DIGITS)")
        sp.add_argument("--output", choices=("human", "json", "csv"),
                        default="human")

    c = sub.add_parser("compute", help="tabulate a constant sequence")
    c.add_argument("sequence", help="gamma|eta|sigma|lehmer-b|d-n|zeta-deriv0")
    c.add_argument("--n", required=True, help="indices, e.g. 0..5 or 1,3")
    c.add_argument("--route", default=None, help="route id or 'all'")
    common(c)

    v = sub.add_parser("verify", help="run identity and structure checks")
    v.add_argument("--suite", default="all",
                   help="'all' or comma-separated catalog/check ids")
    v.add_argument("--tol", default="1e-8")
    v.add_argument("--parallelism", type=int, default=1)
    v.add_argument("--timeout-s", type=int, default=120, dest="timeout_s")
    v.add_argument("--max-n", type=int, default=8, dest="max_n",
                   help="index ceiling for structure checks")
    v.add_argument("--out", default=None, help="also write JSON report here")
    common(v)

    r = sub.add_parser("report", help="verify and emit a JSON report")
    r.add_argument("--suite", default="all")
    r.add_argument("--tol", default="1e-8")
    r.add_argument("--parallelism", type=int, default=1)
    r.add_argument("--timeout-s", type=int, default=120, dest="timeout_s")
    r.add_argument("--max-n", type=int, default=8, dest="max_n")
    r.add_argument("--out", default=None, help="write the report to this file")
    r.add_argument("--digits", type=int, default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0,) else 0
    try:
        if args.command == "compute":
            return run_compute(args)
        if args.command == "verify":
            return run_verify(args)
        if args.command == "report":
            args.output = "json"
            return run_verify(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
