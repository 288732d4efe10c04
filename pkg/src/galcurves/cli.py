"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 numerical or validation failure.
Expressions for ``--kappa`` / ``--tau`` use the grammar of :mod:`galcurves.expr`
in the variable ``s``; note ``-2^2`` evaluates to ``-4``.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__, frenet
from .curve_model import (
    AntiSalkowski,
    CircularHelix,
    GeneralHelix,
    Salkowski,
    example_anti_salkowski,
    example_general_helix,
    make_family,
)
from .curves import Curve
from .errors import CurveError
from .expr import ExprError, scalar_function
from .natural_eq import NaturalEquations, reconstruct
from .polyline import Polyline, make_meta, write_atomic
from .smarandache import SmarandacheKind, smarandache_curve
from .verify import GOLDEN_TOL, run_all

FAMILIES = ("general-helix", "circular-helix", "salkowski", "anti-salkowski")
EXAMPLES = {"example1": example_general_helix, "example2": example_anti_salkowski}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[float, float, int]:
    """``s0:s1:n`` with inclusive endpoints and ``n >= 2``."""
    try:
        a, b, n = text.split(":")
        s0, s1, count = float(a), float(b), int(n)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected s0:s1:n") from None
    if not (math.isfinite(s0) and math.isfinite(s1)) or not s0 < s1:
        raise UsageError(f"bad range {text!r}: need finite s0 < s1")
    if count < 2:
        raise UsageError(f"bad range {text!r}: need n >= 2")
    return s0, s1, count


def parse_domain(text: str) -> tuple[float, float]:
    try:
        a, b = text.split(":")
        s0, s1 = float(a), float(b)
    except ValueError:
        raise UsageError(f"bad domain {text!r}, expected s0:s1") from None
    if not s0 < s1:
        raise UsageError(f"bad domain {text!r}: need s0 < s1")
    return s0, s1


def _number(value: str | None, name: str, kind: str) -> float:
    if value is None:
        raise UsageError(f"{kind} needs {name}")
    try:
        return float(value)
    except ValueError:
        raise UsageError(f"{name} must be a number, got {value!r}") from None


def _expression(value: str | None, name: str, kind: str):
    if value is None:
        raise UsageError(f"{kind} needs {name}")
    return scalar_function(value)


def family_params(kind: str, opts: dict[str, str | None]):
    """Family parameters from flag/key values (strings, possibly missing)."""
    if kind == "general-helix":
        return GeneralHelix(_number(opts.get("m"), "m", kind),
                            _expression(opts.get("kappa"), "kappa", kind))
    if kind == "circular-helix":
        return CircularHelix(_number(opts.get("kappa0"), "kappa0", kind),
                             _number(opts.get("tau0"), "tau0", kind))
    if kind == "salkowski":
        return Salkowski(_number(opts.get("kappa0"), "kappa0", kind),
                         _expression(opts.get("tau"), "tau", kind))
    if kind == "anti-salkowski":
        return AntiSalkowski(_expression(opts.get("kappa"), "kappa", kind),
                             _number(opts.get("tau0"), "tau0", kind))
    raise UsageError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}")


def curve_from_spec(spec: str, domain: tuple[float, float] | None) -> Curve:
    """``example1``, ``example2`` or ``family:key=value,...`` (e.g. ``salkowski:kappa0=1,tau=s``)."""
    if spec in EXAMPLES:
        return EXAMPLES[spec](domain) if domain else EXAMPLES[spec]()
    kind, _, rest = spec.partition(":")
    if kind not in FAMILIES:
        raise UsageError(f"unknown curve {spec!r}; use example1, example2 or FAMILY:key=value,...")
    opts: dict[str, str | None] = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"bad curve parameter {item!r}, expected key=value")
        opts[key.strip()] = value.strip()
    steps = opts.pop("steps", None)
    unknown = set(opts) - {"m", "kappa0", "tau0", "kappa", "tau"}
    if unknown:
        raise UsageError(f"unknown curve parameters: {', '.join(sorted(unknown))}")
    if domain is None:
        raise UsageError(f"family curve {spec!r} needs a domain (--range or --domain)")
    return make_family(family_params(kind, opts), domain,
                       int(_number(steps, "steps", kind)) if steps else None)


def _emit(poly: Polyline, args) -> None:
    text = poly.dumps(args.format, with_meta=not args.no_meta)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)


def _g(v: float) -> str:
    text = format(v, ".15g")
    return "0" if text == "-0" else text


def _vec(v) -> str:
    return "(" + ",".join(_g(c) for c in v) + ")"


def cmd_family(args) -> int:
    s0, s1, n = parse_range(args.range)
    opts = {k: getattr(args, k) for k in ("m", "kappa0", "tau0", "kappa", "tau")}
    params = family_params(args.kind, opts)
    curve = make_family(params, (s0, s1), args.steps)
    _emit(Polyline(curve.sample(n), make_meta(args.kind, "curve", curve.params)), args)
    return 0


def cmd_frenet(args) -> int:
    if (args.at is None) == (args.range is None):
        raise UsageError("frenet needs exactly one of --at or --range")
    if args.range is not None:
        s0, s1, n = parse_range(args.range)
        curve = curve_from_spec(args.curve, (s0, s1))
        grid, prefix = curve.grid(n), True
    else:
        domain = parse_domain(args.domain) if args.domain else None
        curve = curve_from_spec(args.curve, domain)
        grid, prefix = [args.at], False
    for s in grid:
        f = frenet.frenet_frame(curve, s)
        line = f"T={_vec(f.T)} N={_vec(f.N)} B={_vec(f.B)} kappa={_g(f.kappa)} tau={_g(f.tau)}"
        print(f"s={_g(f.s)} {line}" if prefix else line)
    return 0


def cmd_smarandache(args) -> int:
    s0, s1, n = parse_range(args.range)
    curve = curve_from_spec(args.curve, (s0, s1))
    _emit(smarandache_curve(curve, SmarandacheKind(args.kind), n), args)
    return 0


def cmd_reconstruct(args) -> int:
    s0, s1, n = parse_range(args.range)
    steps = args.steps if args.steps is not None else 100 * n
    eqs = NaturalEquations.of(args.kappa, args.tau, (s0, s1))
    curve = reconstruct(eqs, steps)
    _emit(Polyline(curve.sample(n), make_meta("natural-equations", "curve", curve.params)), args)
    return 0


def cmd_admissible(args) -> int:
    s0, s1, n = parse_range(args.range)
    curve = curve_from_spec(args.curve, (s0, s1))
    report = frenet.check_admissible(curve, n)
    print(f"admissible={str(report.admissible).lower()} min_kappa={_g(report.min_kappa)} "
          f"tangent_non_isotropic={str(report.tangent_non_isotropic).lower()}")
    if not report.admissible:
        print(f"offending_s={_g(report.offending_s)} reason={report.reason.value}")
        return 2
    return 0


def cmd_verify(args) -> int:
    results = run_all(args.tolerance)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  err={r.error:.3e}  tol={r.tolerance:.1e}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 2


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default: stdout); written atomically")
    p.add_argument("--no-meta", action="store_true", help="omit the timestamp from metadata")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="galcurves", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("family", help="sample a special curve family")
    p.add_argument("--kind", required=True, choices=FAMILIES)
    p.add_argument("--m")
    p.add_argument("--kappa0")
    p.add_argument("--tau0")
    p.add_argument("--kappa", help="curvature expression in s")
    p.add_argument("--tau", help="torsion expression in s")
    p.add_argument("--range", required=True, help="s0:s1:n")
    p.add_argument("--steps", type=int, help="RK4 steps for integrated families")
    _output_flags(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("frenet", help="print Frenet frames, curvature and torsion")
    p.add_argument("--curve", required=True, help="example1 | example2 | FAMILY:key=value,...")
    p.add_argument("--at", type=float)
    p.add_argument("--range", help="s0:s1:n")
    p.add_argument("--domain", help="s0:s1 domain for family curves with --at")
    p.set_defaults(func=cmd_frenet)

    p = sub.add_parser("smarandache", help="sample a TN / TB / TNB Smarandache curve")
    p.add_argument("--kind", required=True, choices=[k.value for k in SmarandacheKind])
    p.add_argument("--curve", required=True)
    p.add_argument("--range", required=True)
    _output_flags(p)
    p.set_defaults(func=cmd_smarandache)

    p = sub.add_parser("reconstruct", help="integrate natural equations kappa(s), tau(s)")
    p.add_argument("--kappa", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--range", required=True)
    p.add_argument("--steps", type=int, help="RK4 steps (default 100*n)")
    _output_flags(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("admissible", help="check admissibility on a grid")
    p.add_argument("--curve", required=True)
    p.add_argument("--range", required=True)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("verify", help="run the golden example suite")
    p.add_argument("--tolerance", type=float, default=GOLDEN_TOL)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"galcurves: error: {exc}", file=sys.stderr)
        return 1
    except (CurveError, ExprError, ValueError) as exc:
        print(f"galcurves: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
