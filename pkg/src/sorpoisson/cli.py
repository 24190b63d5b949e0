"""Command-line experiment harness.

Subcommands
-----------
sweep        iteration counts over an omega range -> CSV
predict      closed-form optimal omega report
oracle       dense spectral radius over an omega range -> CSV
robin-roots  characteristic-equation report for Robin coefficients

Boundary flags accept ``dirichlet``, ``neumann`` or ``robin:a,b``.
Numbers serialize with 17 significant digits so CSV rows round-trip
exactly; summary/metadata lines start with ``#`` for plotting tools.
Exit codes: 0 success, 2 non-convergent configuration, 1 usage error.
"""

import argparse
import sys

import numpy as np

from .errors import DivergedError, NonConvergentConfigError, NotConvergedError
from .grid import BoundarySet, EdgeCondition, make_grid
from .omega import predict as predict_omega
from .oracle import brute_force_omega, radius_curve
from .robin import HYPER, RobinPair, classify, hyper_wavenumber, trig_wavenumber
from .solvers import (
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
    SolverConfig,
    solve,
)
from .stencils import CENTRAL2, HOC


def _fmt(x):
    return format(float(x), ".17g")


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; remap to 1 so exit
    code 2 stays reserved for non-convergent configurations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_edge(text):
    text = text.strip().lower()
    if text == "dirichlet":
        return EdgeCondition.dirichlet()
    if text == "neumann":
        return EdgeCondition.neumann()
    if text.startswith("robin:"):
        parts = text[len("robin:") :].split(",")
        if len(parts) != 2:
            raise ValueError(f"robin condition needs two coefficients, got {text!r}")
        return EdgeCondition.robin(float(parts[0]), float(parts[1]))
    raise ValueError(f"unknown boundary condition {text!r}")


def _read_config_file(path):
    """Simple key = value lines; '#' starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = line.split("=", 1)
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _add_common(parser, omega_range):
    parser.add_argument("--config", help="key = value file; explicit flags override it")
    parser.add_argument("--nx", type=int)
    parser.add_argument("--ny", type=int)
    parser.add_argument("--scheme", choices=[CENTRAL2, HOC])
    parser.add_argument("--variant", choices=["point", "line"])
    for edge in ("left", "right", "bottom", "top"):
        parser.add_argument(f"--bc-{edge}", default=None)
    if omega_range:
        parser.add_argument("--omega-start", type=float)
        parser.add_argument("--omega-stop", type=float)
        parser.add_argument("--omega-step", type=float)
    parser.add_argument("--out", default=None, help="output file (default: stdout)")


_DEFAULTS = {
    "scheme": CENTRAL2,
    "variant": "point",
    "bc_left": "dirichlet",
    "bc_right": "dirichlet",
    "bc_bottom": "dirichlet",
    "bc_top": "dirichlet",
    "omega_step": 0.005,
    "tol": DEFAULT_TOLERANCE,
    "max_iters": DEFAULT_MAX_ITERATIONS,
}

_CASTS = {
    "nx": int,
    "ny": int,
    "omega_start": float,
    "omega_stop": float,
    "omega_step": float,
    "tol": float,
    "max_iters": int,
}


def _resolve(args, required):
    """Merge defaults, config file and flags (flags win)."""
    merged = dict(_DEFAULTS)
    if getattr(args, "config", None):
        for key, value in _read_config_file(args.config).items():
            merged[key] = _CASTS[key](value) if key in _CASTS else value
    for key, value in vars(args).items():
        if value is not None and key != "config":
            merged[key] = value
    missing = [k for k in required if merged.get(k) is None]
    if missing:
        raise ValueError(f"missing required option(s): {', '.join('--' + m.replace('_', '-') for m in missing)}")
    return merged


def _setup(merged):
    grid = make_grid(merged["nx"], merged["ny"])
    bcs = BoundarySet(
        left=parse_edge(merged["bc_left"]),
        right=parse_edge(merged["bc_right"]),
        bottom=parse_edge(merged["bc_bottom"]),
        top=parse_edge(merged["bc_top"]),
    )
    return grid, bcs


def _omega_grid(merged):
    start, stop, step = merged["omega_start"], merged["omega_stop"], merged["omega_step"]
    if step <= 0:
        raise ValueError("omega step must be positive")
    if not (0.0 < start < 2.0 and 0.0 < stop < 2.0 and start <= stop):
        raise ValueError("omega range must satisfy 0 < start <= stop < 2")
    count = int(round((stop - start) / step)) + 1
    return [round(start + k * step, 12) for k in range(count) if start + k * step <= stop + 1e-12]


def _emit(lines, out):
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _describe(merged, grid, bcs):
    return [
        f"# scheme = {merged['scheme']}",
        f"# variant = {merged['variant']}",
        f"# nx = {grid.nx}",
        f"# ny = {grid.ny}",
        f"# beta = {_fmt(grid.beta)}",
        f"# bc-left = {bcs.left}",
        f"# bc-right = {bcs.right}",
        f"# bc-bottom = {bcs.bottom}",
        f"# bc-top = {bcs.top}",
    ]


def cmd_sweep(args):
    merged = _resolve(args, ("nx", "ny", "omega_start", "omega_stop"))
    grid, bcs = _setup(merged)
    omegas = _omega_grid(merged)
    prediction = predict_omega(grid, bcs, merged["scheme"], merged["variant"])

    lines = _describe(merged, grid, bcs)
    lines.append(f"# omega-step = {_fmt(merged['omega_step'])}")
    lines.append(f"# tol = {_fmt(merged['tol'])}")
    lines.append(f"# max-iters = {merged['max_iters']}")
    lines.append("omega,iterations,final_norm,converged")
    best = None
    for w in omegas:
        config = SolverConfig(
            merged["scheme"], merged["variant"], w, merged["tol"], merged["max_iters"]
        )
        try:
            report = solve(grid, bcs, config)
        except (NotConvergedError, DivergedError) as exc:
            report = exc.report
        lines.append(
            f"{_fmt(w)},{report.iterations},{_fmt(report.final_norm)},"
            f"{'true' if report.converged else 'false'}"
        )
        if report.converged and (best is None or report.iterations < best[1]):
            best = (w, report.iterations)
    if best is not None:
        lines.append(f"# argmin omega = {_fmt(best[0])}")
        lines.append(f"# argmin iterations = {best[1]}")
    else:
        lines.append("# argmin omega = none (no run converged)")
    lines.append(f"# predicted omega = {_fmt(prediction.omega_opt)}")
    _emit(lines, merged.get("out"))

    if merged.get("plot_script"):
        _emit(_gnuplot_script(merged), merged["plot_script"])
    return 0


def _gnuplot_script(merged):
    csv = merged.get("out") or "sweep.csv"
    return [
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set xlabel 'omega'",
        "set ylabel 'iterations'",
        f"set title '{merged['scheme']} {merged['variant']} SOR ({merged['nx']}x{merged['ny']})'",
        f"plot '{csv}' using 1:2 with linespoints notitle",
    ]


def cmd_predict(args):
    merged = _resolve(args, ("nx", "ny"))
    grid, bcs = _setup(merged)
    pr = predict_omega(grid, bcs, merged["scheme"], merged["variant"])
    lines = _describe(merged, grid, bcs)
    lines.append(f"kx = {pr.kx}")
    lines.append(f"ky = {pr.ky}")
    if pr.r is not None:
        lines.append(f"r = {_fmt(pr.r)}")
    if pr.hoc is not None:
        hc = pr.hoc
        lines.append(f"k1 = {_fmt(hc.k1)}")
        lines.append(f"k2 = {_fmt(hc.k2)}")
        lines.append(
            "# expansion constants: "
            + " ".join(
                f"{name}={_fmt(getattr(hc, name))}"
                for name in ("c1", "c2", "p", "q", "delta_kk", "A", "B", "D", "R")
            )
        )
    lines.append(f"omega_opt = {_fmt(pr.omega_opt)}")
    if pr.spectral_radius is not None:
        qualifier = "approximate" if pr.radius_is_approximate else "exact"
        lines.append(f"predicted_spectral_radius = {_fmt(pr.spectral_radius)} ({qualifier})")
    _emit(lines, merged.get("out"))
    return 0


def cmd_oracle(args):
    merged = _resolve(args, ("nx", "ny", "omega_start", "omega_stop"))
    grid, bcs = _setup(merged)
    omegas = _omega_grid(merged)
    prediction = predict_omega(grid, bcs, merged["scheme"], merged["variant"])
    curve = radius_curve(grid, bcs, merged["scheme"], merged["variant"], omegas)
    w_star, rho_star = min(curve, key=lambda row: row[1])
    lines = _describe(merged, grid, bcs)
    lines.append("omega,spectral_radius")
    lines.extend(f"{_fmt(w)},{_fmt(rho)}" for w, rho in curve)
    lines.append(f"# oracle omega = {_fmt(w_star)}")
    lines.append(f"# oracle radius = {_fmt(rho_star)}")
    lines.append(f"# predicted omega = {_fmt(prediction.omega_opt)}")
    lines.append(f"# |oracle - predicted| = {_fmt(abs(w_star - prediction.omega_opt))}")
    _emit(lines, merged.get("out"))
    return 0


def cmd_robin_roots(args):
    pair = RobinPair(args.a, args.b, args.c, args.d, args.n_cells)
    lines = [f"ad - bc = {_fmt(pair.det)}"]
    if pair.det != 0.0:
        m = pair.a * pair.c / pair.det
        n = pair.b * pair.d / pair.det
        cls = classify(m, n)
        lines.append(f"m = {_fmt(m)}")
        lines.append(f"n = {_fmt(n)}")
        lines.append(f"hyperbolic positive-root bound = {cls.max_positive_roots}")
    else:
        lines.append("m = undefined (ad - bc = 0)")
        lines.append("n = undefined (ad - bc = 0)")
    k_hyper = hyper_wavenumber(pair)
    if k_hyper is not None:
        lines.append("equation = hyperbolic")
        lines.append(f"k = {k_hyper:.9f}")
    else:
        lines.append("equation = trigonometric")
        lines.append(f"k = {trig_wavenumber(pair):.9f}")
    _emit(lines, args.out)
    return 0


def build_parser():
    parser = _Parser(prog="sorpoisson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="iteration counts over an omega range")
    _add_common(p_sweep, omega_range=True)
    p_sweep.add_argument("--tol", type=float)
    p_sweep.add_argument("--max-iters", type=int, dest="max_iters")
    p_sweep.add_argument("--plot-script", dest="plot_script", help="also emit a gnuplot script")
    p_sweep.set_defaults(func=cmd_sweep)

    p_pred = sub.add_parser("predict", help="closed-form optimal omega report")
    _add_common(p_pred, omega_range=False)
    p_pred.set_defaults(func=cmd_predict)

    p_oracle = sub.add_parser("oracle", help="dense spectral radius over an omega range")
    _add_common(p_oracle, omega_range=True)
    p_oracle.set_defaults(func=cmd_oracle)

    p_roots = sub.add_parser("robin-roots", help="Robin characteristic-equation report")
    p_roots.add_argument("--a", type=float, required=True)
    p_roots.add_argument("--b", type=float, required=True)
    p_roots.add_argument("--c", type=float, required=True)
    p_roots.add_argument("--d", type=float, required=True)
    p_roots.add_argument("--n-cells", type=int, dest="n_cells", required=True)
    p_roots.add_argument("--out", default=None)
    p_roots.set_defaults(func=cmd_robin_roots)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonConvergentConfigError as exc:
        print(f"non-convergent configuration: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
