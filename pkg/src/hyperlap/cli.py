"""Command line interface.

Exit codes: 0 when the requested bound holds (or the command is purely
informational), 1 when a verified bound is violated, 2 on invalid input,
3 on convergence or certification failure.
"""

import argparse
import json
import math
import sys

import numpy as np

from .constants import EXCESS, lt_best_known, lt_classical
from .counting import CountingFunction, polya_rows, ratio_rows, verify_bound
from .discretize import Interval, PotentialSpec, assemble_cheb
from .errors import (
    CertificationError,
    ConvergenceError,
    IncompleteTableError,
    QuadratureError,
    RealityError,
)
from .lt_verify import (
    TRIAL_NAMES,
    BoxPotential,
    ProductDomain,
    lt_check,
    sobolev_check,
    trial_profile,
)
from .sl_family import SLProblem, solve_problem, sweep
from .svgplot import line_plot


def _emit(text, path):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _emit_json(obj, path):
    _emit(json.dumps(obj, indent=2) + "\n", path)


def _csv_text(header, rows):
    lines = [header]
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, float):
                cells.append(f"{cell:.17g}")
            else:
                cells.append(str(cell))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _apply_config(args, argv):
    """Overlay config-file values onto args; explicit flags win."""
    if not getattr(args, "config", None):
        return
    with open(args.config) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    argv = argv or []
    for key in sorted(data):
        dest = key.replace("-", "_")
        if dest == "config" or not hasattr(args, dest):
            raise ValueError(f"unknown config key {key!r}")
        flag = "--" + key
        if any(a == flag or a.startswith(flag + "=") for a in argv):
            continue
        value = data[key]
        current = getattr(args, dest)
        if isinstance(current, float) and isinstance(value, int):
            value = float(value)
        setattr(args, dest, value)


def _interval_args(sub):
    sub.add_argument("--alpha", type=float, default=-1.0, help="left end of the t interval")
    sub.add_argument("--beta", type=float, default=1.0, help="right end of the t interval")


def _solver_args(sub):
    sub.add_argument("--n", type=int, default=400, help="collocation intervals")
    sub.add_argument("--tol", type=float, default=1e-10, help="certification tolerance")


def _strip_volume(alpha, beta):
    # width-pi strip between heights exp(alpha) and exp(beta)
    return math.pi * (math.exp(-alpha) - math.exp(-beta))


def cmd_constants(args):
    out = {
        "classical": lt_classical(args.gamma, args.dim),
        "theorem": (
            lt_best_known(args.gamma, args.dim, args.excess)
            if args.gamma >= 0.5
            else None
        ),
    }
    if args.json:
        _emit_json(out, args.json)
    else:
        tail = (
            f", theorem {out['theorem']:.12g}" if out["theorem"] is not None else ""
        )
        print(f"gamma={args.gamma} d={args.dim}: classical {out['classical']:.12g}{tail}")
    return 0


def cmd_ratio(args):
    rows = ratio_rows(args.dmin, args.dmax, args.excess)
    worst = min(rows, key=lambda r: r[1])
    ok = worst[1] > 1.0
    if args.csv:
        _emit(_csv_text("d,ratio", rows), args.csv)
    if args.svg:
        ds = [d for d, _ in rows]
        rs = [r for _, r in rows]
        ones = [1.0 for _ in rows]
        _emit(
            line_plot(
                [("constant ratio", ds, rs), ("break-even", ds, ones)],
                title="product vs direct counting constants",
                xlabel="dimension",
                ylabel="ratio",
            ),
            args.svg,
        )
    if args.json:
        _emit_json(
            {
                "d_min": args.dmin,
                "d_max": args.dmax,
                "excess": args.excess,
                "rows": [[d, r] for d, r in rows],
                "all_above_one": ok,
            },
            args.json,
        )
    if not (args.csv or args.svg or args.json):
        print(
            f"ratio over d in [{args.dmin},{args.dmax}]: "
            f"min {worst[1]:.6f} at d={worst[0]}"
        )
    return 0 if ok else 1


def cmd_eig(args):
    interval = Interval(args.alpha, args.beta)
    pot = PotentialSpec(ell=args.ell)
    if args.dump_matrix:
        op = assemble_cheb(interval, pot, args.n)
        buf = []
        for row in op.matrix:
            buf.append(",".join(f"{v:.17g}" for v in row))
        _emit("\n".join(buf) + "\n", args.dump_matrix)
    spec = solve_problem(SLProblem(interval, pot), n=args.n, cutoff=args.cutoff)
    if args.csv:
        rows = [(args.ell, k, float(nu)) for k, nu in enumerate(spec.values, start=1)]
        _emit(_csv_text("ell,k,nu", rows), args.csv)
    if args.json:
        _emit_json(
            {
                "ell": args.ell,
                "alpha": args.alpha,
                "beta": args.beta,
                "n": args.n,
                "cutoff": args.cutoff,
                "count": int(len(spec)),
                "max_imag": spec.max_imag,
                "nu": [float(v) for v in spec.values],
            },
            args.json,
        )
    if not (args.csv or args.json):
        head = ", ".join(f"{v:.12g}" for v in spec.values[:5])
        print(f"ell={args.ell}: {len(spec)} eigenvalues <= cutoff; first [{head}]")
    return 0


def _parse_ell_max(raw):
    if raw is None or raw == "auto":
        return None
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise ValueError(f"--ell-max expects an integer or 'auto', got {raw!r}")


def _run_sweep(args):
    interval = Interval(args.alpha, args.beta)
    return sweep(
        interval,
        args.cutoff,
        tol=args.tol,
        n=args.n,
        ell_max=_parse_ell_max(args.ell_max),
    )


def cmd_sweep(args):
    table = _run_sweep(args)
    if args.csv:
        _emit(table.to_csv(), args.csv)
    if args.json:
        nus = table.nus()
        _emit_json(
            {
                "cutoff": table.cutoff,
                "ell_max": table.ell_max,
                "resolution": table.resolution,
                "tolerance": table.tolerance,
                "margin": table.margin,
                "modes": len(table.modes()),
                "entries": len(table.entries),
                "nu_min": float(nus[0]) if nus.size else None,
                "nu_max": float(nus[-1]) if nus.size else None,
            },
            args.json,
        )
    if not (args.csv or args.json):
        print(
            f"swept {len(table.modes())} modes (ell_max {table.ell_max}), "
            f"{len(table.entries)} certified eigenvalues <= {table.cutoff * (1 + table.margin):g}"
        )
    return 0


def cmd_polya(args):
    table = _run_sweep(args)
    volume = _strip_volume(args.alpha, args.beta)
    cf = CountingFunction.from_table(table, volume)
    report = verify_bound(
        cf, "polya", args.cutoff, grid=args.grid, scale=args.constant_scale
    )
    rows = polya_rows(cf, args.cutoff)
    if args.csv:
        _emit(_csv_text("lambda,count,bound", rows), args.csv)
    if args.svg:
        lam = [r[0] for r in rows]
        cnt = [float(r[1]) for r in rows]
        bnd = [r[2] * args.constant_scale for r in rows]
        _emit(
            line_plot(
                [("counting function", lam, cnt), ("semiclassical line", lam, bnd)],
                title="eigenvalue staircase vs semiclassical line",
                xlabel="lambda",
                ylabel="count",
            ),
            args.svg,
        )
    if args.json:
        _emit_json(report.to_json_dict(), args.json)
    if not (args.csv or args.svg or args.json):
        state = "VIOLATED" if report.violated else "holds"
        print(
            f"semiclassical bound {state} up to {args.cutoff:g}: "
            f"min margin {report.min_margin:.6f} at lambda {report.argmin_lambda:.6f}"
        )
    return 1 if report.violated else 0


def cmd_ltcheck(args):
    domain = ProductDomain(x_length=args.x_length, a=args.a, b=args.b)
    pot = BoxPotential(domain=domain, height=args.cutoff)
    report = lt_check(pot, args.gamma, tol=args.tol, n=args.n, excess=args.excess)
    if args.json:
        _emit_json(report.to_json_dict(), args.json)
    else:
        state = "holds" if report.passed else "VIOLATED"
        print(
            f"trace inequality {state} at gamma={args.gamma} height={args.cutoff:g}: "
            f"ratio {report.ratio:.6f}"
        )
    return 0 if report.passed else 1


def cmd_sobolev(args):
    domain = ProductDomain(x_length=args.x_length, a=args.a, b=args.b)
    names = list(TRIAL_NAMES) if args.profile == "all" else [args.profile]
    reports = [
        sobolev_check(trial_profile(name, domain), domain, tol=args.tol)
        for name in names
    ]
    ok = all(r.passed for r in reports)
    if args.json:
        _emit_json([r.to_json_dict() for r in reports], args.json)
    else:
        for r in reports:
            state = "holds" if r.passed else "VIOLATED"
            print(
                f"{r.name}: dual inequality {state}, margin {r.margin:.6g} "
                f"({r.nodes} nodes)"
            )
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperlap",
        description="eigenvalue bounds for the hyperbolic Laplacian at desk scale",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("constants", help="closed-form bound constants")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--excess", type=float, default=EXCESS)
    p.add_argument("--json", metavar="PATH", help="write JSON ('-' for stdout)")
    p.set_defaults(func=cmd_constants)

    p = subs.add_parser("ratio", help="constant ratio across dimensions")
    p.add_argument("--dmin", type=int, default=2)
    p.add_argument("--dmax", type=int, default=20)
    p.add_argument("--excess", type=float, default=EXCESS)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_ratio)

    p = subs.add_parser("eig", help="one family member, plain solve")
    p.add_argument("--ell", type=int, default=0)
    _interval_args(p)
    p.add_argument("--n", type=int, default=400)
    p.add_argument("--cutoff", type=float, default=None)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--dump-matrix", metavar="PATH", help="write the collocation matrix")
    p.set_defaults(func=cmd_eig)

    p = subs.add_parser("sweep", help="certified eigenvalue table")
    p.add_argument("--cutoff", type=float, default=1000.0)
    _interval_args(p)
    _solver_args(p)
    p.add_argument("--ell-max", default="auto", help="integer, or 'auto' to search")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("polya", help="staircase vs semiclassical line")
    p.add_argument("--cutoff", type=float, default=1000.0)
    _interval_args(p)
    _solver_args(p)
    p.add_argument("--ell-max", default="auto", help="integer, or 'auto' to search")
    p.add_argument("--grid", type=int, default=10000)
    p.add_argument(
        "--constant-scale",
        type=float,
        default=1.0,
        help="multiply the bound (values < 1 manufacture violations)",
    )
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_polya)

    p = subs.add_parser("ltcheck", help="trace inequality for the box potential")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--cutoff", type=float, default=100.0, help="potential height")
    p.add_argument("--x-length", type=float, default=math.pi)
    p.add_argument("--a", type=float, default=1.0 / math.e)
    p.add_argument("--b", type=float, default=math.e)
    p.add_argument("--n", type=int, default=400)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--excess", type=float, default=EXCESS)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_ltcheck)

    p = subs.add_parser("sobolev", help="dual inequality on trial functions")
    p.add_argument(
        "--profile", default="all", choices=list(TRIAL_NAMES) + ["all"]
    )
    p.add_argument("--x-length", type=float, default=math.pi)
    p.add_argument("--a", type=float, default=1.0 / math.e)
    p.add_argument("--b", type=float, default=math.e)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_sobolev)

    for sub in subs.choices.values():
        sub.add_argument(
            "--config", metavar="PATH", help="JSON file of long-flag defaults"
        )
    return parser


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return args.func(args)
    except (ValueError, IncompleteTableError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, CertificationError, RealityError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
