"""Command-line interface.

JSON goes to stdout, human-readable summaries to stderr.  Exit status is 0 on
success or a certified verdict, 2 on a refuted verdict, 1 on bad usage or bad
parameters.  ``ZF_TOL`` in the environment overrides the default tolerance.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import plot, reproduce
from ._backend import BACKEND
from .criteria import DEFAULT_TOL, RIGHT, AngleParams, certify_a2, certify_b2, certify_oracle, two_point_theta
from .geom import DomainError, certification_points
from .maximality import boundary_scan, grow
from .permanent import permanent_exact, sample_and_verify
from .regions import (INTERVAL_MAX_RATIO, BoundResult, icecream_tstar, rectangle_max_halfheight,
                      trapezoid_max_long_side, two_point_region_contains)
from .serialize import load_region, matrix_from_json

EXIT_OK, EXIT_USAGE, EXIT_REFUTED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def default_tol() -> float:
    raw = os.environ.get("ZF_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"ZF_TOL={raw!r} is not a number") from None
    if not tol >= 0:
        raise DomainError("ZF_TOL must be nonnegative")
    return tol


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def _fmt_complex(z: complex) -> str:
    return f"{z.real:g}{'+' if z.imag >= 0 else '-'}{abs(z.imag):g}i"


def cmd_certify(args) -> int:
    region = load_region(args.region)
    pts = certification_points(region, args.samples)
    tol = default_tol() if args.tol is None else args.tol
    if args.criterion == "a2":
        rep = certify_a2(pts, tol)
    elif args.criterion == "b2":
        rep = certify_b2(pts, tol)
    else:
        rep = certify_oracle(pts, AngleParams(args.theta, args.phi), tol)
    _emit(rep.to_json())
    _say(f"{rep.verdict} under {rep.criterion}: worst {rep.worst_value:.3e} over {rep.tuples_checked} tuples")
    return EXIT_OK if rep.certified else EXIT_REFUTED


def cmd_bounds(args) -> int:
    if args.family == "rectangle":
        res = rectangle_max_halfheight(args.M, args.L)
    elif args.family == "trapezoid":
        res = trapezoid_max_long_side(args.M, args.t)
    elif args.family == "icecream":
        tol = args.tol if args.tol is not None else 1e-8
        res = BoundResult(icecream_tstar(tol), "icecream-tstar", {"tol": tol})
    else:
        res = BoundResult(INTERVAL_MAX_RATIO, "interval-ratio", {})
    _emit(res.to_json())
    _say(f"{res.formula_id} = {res.value:.12g}")
    return EXIT_OK


def cmd_two_point(args) -> int:
    w = complex(args.x, args.y)
    if args.theta == RIGHT:
        inside = two_point_region_contains(args.x, args.y)
    else:
        inside = two_point_theta(1.0, w, args.theta)
    _emit({"x": args.x, "y": args.y, "theta": args.theta, "member": inside})
    _say(f"{{1, {_fmt_complex(w)}}} {'is' if inside else 'is not'} angle-restricted at theta={args.theta:g}")
    return EXIT_OK if inside else EXIT_REFUTED


def cmd_maximality(args) -> int:
    prof = boundary_scan(load_region(args.region), n=args.n, tol=default_tol())
    _emit(prof.to_json())
    _say(f"{len(prof.maximal_points())} of {len(prof.points)} boundary points maximal under F, "
         f"{len(prof.maximal_points(use_g=True))} under G")
    return EXIT_OK


def cmd_grow(args) -> int:
    trace = grow(load_region(args.seed), args.steps, schedule=args.schedule, tol=default_tol(),
                 criterion=args.criterion)
    _emit(trace.to_json())
    _say(f"{len(trace.polygons)} polygons, final has {len(trace.final)} vertices, area {trace.final.area():.6g}")
    return EXIT_OK


def cmd_permanent(args) -> int:
    if args.mode == "exact":
        if args.matrix is None:
            raise UsageError("permanent exact needs --matrix")
        p = permanent_exact(matrix_from_json(json.loads(Path(args.matrix).read_text())))
        _emit({"re": p.real + 0.0, "im": p.imag + 0.0, "text": _fmt_complex(p)})
        _say(_fmt_complex(p))
        return EXIT_OK
    if args.region is None:
        raise UsageError("permanent sample needs --region")
    stats = sample_and_verify(load_region(args.region), (args.nmin, args.nmax), args.count, args.seed)
    _emit(stats.to_json())
    _say(f"{stats.zeros_found} zero permanents in {stats.count} matrices; min |per| = {stats.min_abs_perm:.3e}")
    return EXIT_OK


def cmd_emit(args) -> int:
    region = load_region(args.region)
    if args.format == "csv":
        text = plot.to_csv(region, args.n)
    else:
        text = plot.to_svg(region, plot.distinguished_points(region), args.n)
    if args.out:
        Path(args.out).write_text(text)
        _say(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    checks = reproduce.run(args.example)
    for c in checks:
        _say(c.line())
    ok = all(c.passed for c in checks)
    _emit({"example": args.example, "passed": ok,
           "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]})
    return EXIT_OK if ok else EXIT_REFUTED


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zerofree", description="Certify sets on which permanents cannot vanish.")
    p.add_argument("--version", action="version", version=f"zerofree 0.1.0 ({BACKEND} kernels)")
    sp = p.add_subparsers(dest="cmd", parser_class=_Parser, required=True)

    c = sp.add_parser("certify", help="certify a region file")
    c.add_argument("region")
    c.add_argument("--criterion", choices=["a2", "b2", "oracle"], default="a2")
    c.add_argument("--samples", type=_positive_int, default=128, help="boundary samples for disks and cones")
    c.add_argument("--tol", type=float, default=None)
    c.add_argument("--theta", type=float, default=RIGHT, help="oracle opening angle")
    c.add_argument("--phi", type=float, default=RIGHT, help="oracle image angle")
    c.set_defaults(func=cmd_certify)

    b = sp.add_parser("bounds", help="closed-form region bounds")
    bs = b.add_subparsers(dest="family", parser_class=_Parser, required=True)
    r = bs.add_parser("rectangle")
    r.add_argument("--M", type=float, required=True)
    r.add_argument("--L", type=float, required=True)
    t = bs.add_parser("trapezoid")
    t.add_argument("--M", type=float, required=True)
    t.add_argument("--t", type=float, required=True)
    i = bs.add_parser("icecream")
    i.add_argument("--tol", type=float, default=None)
    bs.add_parser("interval")
    b.set_defaults(func=cmd_bounds)

    w = sp.add_parser("two-point", help="membership of {1, x+iy}")
    w.add_argument("--x", type=float, required=True)
    w.add_argument("--y", type=float, required=True)
    w.add_argument("--theta", type=float, default=RIGHT)
    w.set_defaults(func=cmd_two_point)

    m = sp.add_parser("maximality", help="boundary slack profile")
    m.add_argument("region")
    m.add_argument("--n", type=_positive_int, default=256)
    m.set_defaults(func=cmd_maximality)

    g = sp.add_parser("grow", help="grow a certified polygon by push-outs")
    g.add_argument("--seed", required=True)
    g.add_argument("--steps", type=int, required=True)
    g.add_argument("--schedule", choices=["round-robin", "max-slack"], default="round-robin")
    g.add_argument("--criterion", choices=["a2", "b2"], default="a2")
    g.set_defaults(func=cmd_grow)

    q = sp.add_parser("permanent", help="exact permanents and random checks")
    q.add_argument("mode", choices=["sample", "exact"])
    q.add_argument("--matrix")
    q.add_argument("--region")
    q.add_argument("--nmin", type=_positive_int, default=2)
    q.add_argument("--nmax", type=_positive_int, default=8)
    q.add_argument("--count", type=_positive_int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_permanent)

    e = sp.add_parser("emit", help="SVG or CSV outline of a region")
    e.add_argument("--region", required=True)
    e.add_argument("--format", choices=["svg", "csv"], default="svg")
    e.add_argument("--out")
    e.add_argument("--n", type=_positive_int, default=256)
    e.set_defaults(func=cmd_emit)

    x = sp.add_parser("reproduce", help="run a worked-example pipeline")
    x.add_argument("example", choices=list(reproduce.EXAMPLES))
    x.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _say(str(exc))
        return EXIT_USAGE
    except (DomainError, OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        _say(f"zerofree: error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
