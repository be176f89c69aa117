"""Command-line front end: ``genint eval | gram | verify``.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from fractions import Fraction

from genint import closed_forms as cf
from genint import confluent as cfl
from genint import laguerre as lg
from genint.genquad import QuadratureConfig
from genint.verify import SUITES, VerifyConfig, run_suites


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- formatting ---------------------------------------------------------------

def _r15(x: float):
    if math.isnan(x) or math.isinf(x):
        return None
    v = float(f"{x:.15g}")
    return 0.0 if v == 0 else v


def complex_json(z) -> dict:
    z = complex(z)
    return {"re": _r15(z.real), "im": _r15(z.imag)}


def complex_csv(z) -> str:
    z = complex(z)
    re = _r15(z.real)
    out = f"{re:.15g}"
    if z.imag != 0:
        out += f"{z.imag:+.15g}i"
    return out


def parse_number(text: str):
    """int, then exact fraction ``p/q``, then float, then Python complex syntax."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None


def _num(text):
    return parse_number(text)


# -- eval -----------------------------------------------------------------------

def cmd_eval(args) -> int:
    z = args.z
    if isinstance(z, complex) or z <= 0:
        raise UsageError("--z must be a positive real number")
    z = float(z)
    if args.fn == "laguerre":
        if args.n is None or args.n < 0:
            raise UsageError("--fn laguerre needs --n >= 0")
        alpha = args.alpha if args.alpha is not None else 0
        value = lg.laguerre_eval(lg.laguerre_build(args.n, alpha), z)
        params = {"n": args.n, "alpha": complex_json(alpha)}
    else:
        if args.theta is None or args.alpha is None:
            raise UsageError(f"--fn {args.fn} needs --theta and --alpha")
        p = cfl.LieParams(args.theta, args.alpha)
        params = {"theta": complex_json(args.theta), "alpha": complex_json(args.alpha)}
        if args.fn == "kummer":
            value = cfl.kummer_F(p, z)
        else:
            value = cfl.tricomi_U(p, z)
    params["z"] = _r15(z)
    if args.json:
        print(json.dumps({"fn": args.fn, "params": params, "value": complex_json(value)}))
    else:
        print(complex_csv(value))
    return 0


# -- gram -----------------------------------------------------------------------

def cmd_gram(args) -> int:
    if args.dim < 1:
        raise UsageError("--dim must be >= 1")
    G = cf.gram_matrix(args.alpha, args.dim)
    if args.format == "json":
        doc = {"alpha": complex_json(G.alpha), "dim": G.dim,
               "entries": [[complex_json(v) for v in row] for row in G.entries]}
        if args.verbose:
            doc["regime"] = [[r.value for r in row] for row in G.regime]
        print(json.dumps(doc))
        return 0
    for row in G.entries:
        print(",".join(complex_csv(v) for v in row))
    if args.verbose:
        print()
        for row in G.regime:
            print(",".join(r.value for r in row))
    return 0


# -- verify ---------------------------------------------------------------------

_QUAD_KEYS = {f.name: f.type for f in dataclasses.fields(QuadratureConfig)}


def read_config(path: str) -> dict:
    """``key = value`` lines; ``#`` comments and blank lines are ignored."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    for i, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{i}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _QUAD_KEYS:
            raise UsageError(f"{path}:{i}: unknown key {key!r}")
        out[key] = val
    return out


def _quad_config(args) -> QuadratureConfig:
    raw = read_config(args.config) if args.config else {}
    for key in _QUAD_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            raw[key] = flag
    vals = {}
    for key, val in raw.items():
        try:
            vals[key] = int(val) if key == "max_levels" else float(val)
        except (TypeError, ValueError):
            raise UsageError(f"bad value for {key}: {val!r}") from None
    try:
        return QuadratureConfig(**vals)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def report_json(reports, timings: bool) -> str:
    rows = []
    for r in reports:
        rows.append({
            "id": r.id,
            "regime": r.regime,
            "closed_form": complex_json(r.closed_form),
            "oracle": {k: complex_json(v) for k, v in sorted(r.oracle.items())},
            "abs_err": _r15(r.abs_err),
            "rel_err": _r15(r.rel_err),
            "tol": _r15(r.tol),
            "pass": r.passed,
            "seconds": _r15(r.seconds) if timings and r.seconds is not None else None,
        })
    return json.dumps(rows, indent=1) + "\n"


def cmd_verify(args) -> int:
    if args.tol_scale <= 0:
        raise UsageError("--tol-scale must be positive")
    cfg = VerifyConfig(quad=_quad_config(args), tol_scale=args.tol_scale)
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = run_suites(names, cfg)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        msg = r.error or f"abs_err={r.abs_err:.3g} tol={r.tol:.3g}"
        print(f"FAIL {r.id}: {msg}", file=sys.stderr)
    summary = f"{len(reports) - len(failed)}/{len(reports)} cases passed ({', '.join(names)})"
    if args.json == "-":
        # stdout carries the report alone, the summary goes to stderr
        sys.stdout.write(report_json(reports, args.timings))
        print(summary, file=sys.stderr)
    else:
        print(summary)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report_json(reports, args.timings))
    return 1 if failed else 0


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genint", description="Generalized integrals of confluent functions.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    pe = sub.add_parser("eval", help="evaluate Kummer F, Tricomi U or a Laguerre polynomial")
    pe.add_argument("--fn", required=True, choices=("kummer", "tricomi", "laguerre"))
    pe.add_argument("--theta", type=_num)
    pe.add_argument("--alpha", type=_num)
    pe.add_argument("--n", type=int)
    pe.add_argument("--z", type=_num, required=True)
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_eval)

    pg = sub.add_parser("gram", help="generalized Laguerre Gram matrix")
    pg.add_argument("--alpha", type=_num, required=True)
    pg.add_argument("--dim", type=int, required=True)
    pg.add_argument("--format", choices=("csv", "json"), default="csv")
    pg.add_argument("--verbose", action="store_true", help="append the regime matrix")
    pg.set_defaults(func=cmd_gram)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", choices=SUITES + ("all",), default="all")
    pv.add_argument("--tol-scale", type=float, default=1.0)
    pv.add_argument("--json", metavar="PATH", nargs="?", const="-",
                    help="write the JSON report to PATH, or to stdout when PATH is omitted or '-'")
    pv.add_argument("--config", metavar="PATH", help="key=value file overriding quadrature defaults")
    pv.add_argument("--timings", action="store_true", help="record per-case runtimes in the JSON report")
    for key in _QUAD_KEYS:
        pv.add_argument("--" + key.replace("_", "-"), dest=key, default=None)
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a command is required (eval, gram, verify)")
        return args.func(args)
    except UsageError as exc:
        print(f"genint: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"genint: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
