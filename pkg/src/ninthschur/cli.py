"""Command-line front end: suite runner, single-value evaluator and table generator.

Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath as mp

from . import __version__
from .config import Config, ConfigError, load_config
from .shapes import ShapeError, as_skew

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _abc(text: str) -> tuple[int, int, int]:
    v = _ints(text)
    if len(v) != 3 or min(v) < 1:
        raise UsageError(f"--abc needs three positive integers, got {text!r}")
    return v


def _decimal(x, digits: int) -> str:
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def _write(path: str, text: str) -> None:
    if not path or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _config(args) -> Config:
    cfg = load_config(args.config)
    over = {}
    for key in ("digits", "seed", "trials", "max_cells", "jobs", "M"):
        v = getattr(args, key, None)
        if v is not None:
            over[key] = v
    if over:
        cfg = Config.from_mapping({**cfg.snapshot(), "jobs": cfg.jobs, "output": cfg.output, **over})
    return cfg


# verify ------------------------------------------------------------------------

def build_report(suite: str, mode: str, cfg: Config, reps, timing: bool = False) -> dict:
    failed = [r.instance_id for r in reps if not r.ok]
    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "ninthschur", "version": __version__},
        "suite": suite,
        "mode": mode,
        "config": cfg.snapshot(),
        "numerics": {"precision_digits": cfg.digits, "M": cfg.M, "tail_correction": "first-order"},
        "instances": [r.to_dict(timing) for r in reps],
        "summary": {"total": len(reps), "passed": len(reps) - len(failed), "failed": len(failed)},
    }


def cmd_verify(args) -> int:
    from .suites import run_suite

    cfg = _config(args)
    if args.json and args.json != "-":
        _write(args.json, "")
    reps = run_suite(args.suite, cfg, args.mode, include_degenerate=not args.exclude_degenerate)
    report = build_report(args.suite, args.mode, cfg, reps, args.timing)
    out = io.StringIO()
    for r in reps:
        if not r.ok or args.verbose:
            out.write(f"{r.result:22s} {r.instance_id} residual={r.residual}\n")
    s = report["summary"]
    out.write(f"suite={args.suite} mode={args.mode} total={s['total']} passed={s['passed']} failed={s['failed']}\n")
    sys.stdout.write(out.getvalue())
    if args.json:
        _write(args.json, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if s["failed"] == 0 else EXIT_FAIL


# eval --------------------------------------------------------------------------

def cmd_eval(args) -> int:
    cfg = _config(args)
    with mp.workdps(cfg.digits):
        if args.target == "ninth":
            from .ninth import NinthContext, s_route

            sh = as_skew(args.shape)
            r = args.r if args.r is not None else max(1, len(sh.outer))
            print(s_route(NinthContext(slack=cfg.slack), sh, r, args.route))
        elif args.target == "zeta":
            print(_eval_zeta(args, cfg))
        elif args.target == "rect":
            from .mzv.values import rectangle_value

            v = rectangle_value(args.m, args.p, args.q, _abc(args.abc)).value
            print(f"{_decimal(v, cfg.digits)}  [digits={cfg.digits}]")
        elif args.target == "mzv":
            from .mzv.numeric import mzv_star
            from .mzv.regularize import reg_value, regularize

            k = _ints(args.index)
            if args.star:
                v = mzv_star(k)
            elif args.show_poly:
                print(regularize(k, args.side))
                return EXIT_OK
            else:
                v = reg_value(k, args.side, mp.mpf(args.T))
            print(f"{_decimal(v, cfg.digits)}  [digits={cfg.digits}]")
        elif args.target == "genfun":
            from .mzv.series import zast_series

            if args.i < 1 or args.j < 0:
                raise UsageError("need i >= 1 and j >= 0")
            v = zast_series(max(args.i, args.j))[(args.i, args.j)]
            print(f"{_decimal(v, cfg.digits)}  [digits={cfg.digits}]")
    return EXIT_OK


def _eval_zeta(args, cfg: Config) -> str:
    from .mzv.trunc import DiagonalIndex, schur_zeta_float, schur_zeta_trunc

    sh = as_skew(args.shape)
    M = args.M if args.M is not None else cfg.M
    if (args.entries is None) == (args.diag is None):
        raise UsageError("give exactly one of --entries or --diag")
    if args.entries is not None:
        ks = _ints(args.entries)
        cells = sh.cells()
        if len(ks) != len(cells):
            raise UsageError(f"--entries needs {len(cells)} values (row reading order), got {len(ks)}")
        idx = dict(zip(cells, ks))
    else:
        idx = DiagonalIndex.three_zone(*_abc(args.diag)).shift(args.m)
    method = args.method
    if method == "auto":
        method = "exact" if M <= 400 else "float"
    if method == "exact":
        v = schur_zeta_trunc(sh, idx, M)
        return str(v) if isinstance(v, Fraction) else repr(v)
    if not callable(idx):
        raise UsageError("float evaluation needs --diag")
    return f"{schur_zeta_float(sh, idx, M):.17g}  [float64, M={M}]"


# table -------------------------------------------------------------------------

def cmd_table(args) -> int:
    cfg = _config(args)
    abc = _abc(args.abc)
    rows: list[dict] = []
    if args.kind == "zstar":
        lim = max(args.max_a, args.max_c)
        if lim > cfg.table_cap:
            raise UsageError(f"range {lim} exceeds table cap {cfg.table_cap}")
        header = ["a", "c", "value"]
        from .mzv.values import column_value

        with mp.workdps(cfg.digits):
            for a in range(args.max_a + 1):
                for c in range(args.max_c + 1):
                    v = column_value((abc[0],) * a + (abc[1],) + (abc[2],) * c)
                    rows.append({"a": a, "c": c, "value": _decimal(v, cfg.digits)})
    else:
        lim = max(args.max_p, args.max_q)
        if lim > min(cfg.table_cap, 6):
            raise UsageError(f"range {lim} exceeds table cap {min(cfg.table_cap, 6)}")
        header = ["m", "p", "q", "value"]
        from .mzv.values import rectangle_value

        with mp.workdps(cfg.digits):
            for p in range(1, args.max_p + 1):
                for q in range(1, args.max_q + 1):
                    v = rectangle_value(args.m, p, q, abc).value
                    rows.append({"m": args.m, "p": p, "q": q, "value": _decimal(v, cfg.digits)})
    if args.format == "json":
        doc = {"schema": SCHEMA_VERSION, "kind": args.kind, "abc": list(abc), "precision_digits": cfg.digits,
               "columns": header, "rows": rows}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    _write(args.out, text)
    return EXIT_OK


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITES

    p = argparse.ArgumentParser(prog="ninthschur", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--prec", dest="digits", type=int, help="significant digits")
    common.add_argument("--seed", type=int)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--mode", default="exact", choices=("exact", "modular"))
    v.add_argument("--max-cells", dest="max_cells", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--jobs", type=int)
    v.add_argument("--M", type=int, help="truncation for float DP checks")
    v.add_argument("--json", help="write a JSON report to this path ('-' for stdout)")
    v.add_argument("--timing", action="store_true", help="include per-instance timings in the report")
    v.add_argument("--exclude-degenerate", action="store_true",
                   help="skip the a = b = 0 rectangle instances, where the identity fails")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", parents=[common], help="evaluate one value")
    e.add_argument("target", choices=("ninth", "zeta", "rect", "mzv", "genfun"))
    e.add_argument("--shape", help="outer[/inner], parts comma-separated")
    e.add_argument("--r", type=int)
    e.add_argument("--route", default="minor", choices=("minor", "complement", "jt", "dualjt", "giambelli"))
    e.add_argument("--entries", help="per-cell exponents in row reading order")
    e.add_argument("--diag", help="three-zone diagonal index alpha,beta,gamma")
    e.add_argument("--m", type=int, default=0, help="diagonal shift")
    e.add_argument("--M", type=int)
    e.add_argument("--method", default="auto", choices=("auto", "exact", "float"))
    e.add_argument("--p", type=int)
    e.add_argument("--q", type=int)
    e.add_argument("--abc", default="1,2,1")
    e.add_argument("--index", help="MZV index k_1,...,k_d")
    e.add_argument("--side", default="stuffle", choices=("stuffle", "shuffle"))
    e.add_argument("--T", default="0")
    e.add_argument("--star", action="store_true")
    e.add_argument("--show-poly", dest="show_poly", action="store_true")
    e.add_argument("--i", type=int, default=1)
    e.add_argument("--j", type=int, default=0)
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", parents=[common], help="emit a CSV or JSON table")
    t.add_argument("kind", choices=("zstar", "rect"))
    t.add_argument("--abc", default="1,2,1")
    t.add_argument("--max-a", dest="max_a", type=int, default=3)
    t.add_argument("--max-c", dest="max_c", type=int, default=3)
    t.add_argument("--max-p", dest="max_p", type=int, default=3)
    t.add_argument("--max-q", dest="max_q", type=int, default=3)
    t.add_argument("--m", type=int, default=0)
    t.add_argument("--format", default="csv", choices=("csv", "json"))
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_table)
    return p


_REQUIRED = {"ninth": ("shape",), "zeta": ("shape",), "rect": ("p", "q"), "mzv": ("index",)}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            for name in _REQUIRED.get(args.target, ()):
                if getattr(args, name) is None:
                    raise UsageError(f"eval {args.target} needs --{name}")
        return args.func(args)
    except (UsageError, ConfigError, ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
