"""Command-line frontend: resistance, spectra, bound checks, figure data, search.

Exit codes: 0 success, 2 usage or parse error, 3 invalid or disconnected
graph, 4 numerical failure, 10 counterexample found (which for ``verify``
means a violated inequality).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .extremal import scan_family, search_counterexample, unit_cycle_baseline, verify_theorem
from .families import FIGURE_FAMILIES, InfeasibleFamilyError, reference_conductance
from .graphs import GraphError, GraphFormatError, laplacian, load_graph
from .linalg import DEFAULT_JACOBI_TOL, eigen_sym
from .resistance import cycle_rho_closed_form, effective_resistance, global_resistance, three_cycle_rho


def _fmt(x: float) -> str:
    return format(x, ".15g")


def _cmd_resistance(args) -> int:
    g = load_graph(args.graph)
    report = effective_resistance(g, args.i, args.j)
    print(_fmt(report.value))
    print(f"energy_min {_fmt(report.energy_min)}")
    return 0


def _cmd_rho(args) -> int:
    g = load_graph(args.graph)
    print(_fmt(global_resistance(g)))
    return 0


def _cmd_spectrum(args) -> int:
    g = load_graph(args.graph)
    tol = args.tol if args.tol is not None else DEFAULT_JACOBI_TOL
    spectrum = eigen_sym(laplacian(g), tol=tol)
    for value in spectrum.eigenvalues:
        print(_fmt(value))
    return 0


def _cmd_verify(args) -> int:
    conductances = (args.c01, args.c02, args.c12)
    if not all(c > 0.0 for c in conductances):
        print("verify: conductances must all be positive", file=sys.stderr)
        return 2
    tol = args.tol if args.tol is not None else 1e-9
    report = verify_theorem(conductances, tol=tol)
    if report.equality:
        status = "EQUALITY"
    elif report.lower_ok and report.upper_ok:
        status = "OK"
    else:
        status = "VIOLATION"
    print(f"lambda1_rho={_fmt(report.lambda1_rho)} lambda2_rho={_fmt(report.lambdamax_rho)} {status}")
    return 0 if (report.lower_ok and report.upper_ok) else 10


def _reference_rho(family: str, point) -> tuple[float, float]:
    """(reference conductance, its rho error) for the solved edge of one row."""
    ref = reference_conductance(family, point.parameter)
    spec = FIGURE_FAMILIES[family]
    if ref is None or not (np.isfinite(ref) and ref > 0.0):
        return (ref if ref is not None else float("nan")), float("nan")
    conducts = list(point.conductances)
    conducts[spec.solved_edge] = ref
    if spec.n == 3:
        rho = three_cycle_rho(*conducts)
    else:
        rho = cycle_rho_closed_form(conducts)
    return ref, rho - spec.target_rho


def _cmd_figure(args) -> int:
    if args.steps < 1 or not args.lo < args.hi:
        print("figure: need lo < hi and steps >= 1", file=sys.stderr)
        return 2
    spec = FIGURE_FAMILIES[args.family]
    grid = np.linspace(args.lo, args.hi, args.steps)
    try:
        rows = scan_family(args.family, grid)
    except ValueError as exc:
        print(f"figure: {exc}", file=sys.stderr)
        return 2
    skipped = len(grid) - len(rows)
    with_reference = args.family in ("fig2", "fig4")

    headers = ["param"]
    if spec.n == 3:
        headers += ["c_0_1", "c_0_2", "c_1_2"]
    else:
        headers += [f"c_{k}_{k + 1}" for k in range(spec.n - 1)] + [f"c_0_{spec.n - 1}"]
    headers += ["rho"]
    headers += [f"lambda_{k}" for k in range(1, spec.n)]
    headers += ["lambda1_rho", "lambdamax_rho"]
    if with_reference:
        headers += ["reference_c", "reference_rho_err"]

    lines = [",".join(headers)]
    max_reference_err = 0.0
    for point in rows:
        cells = [repr(point.parameter)]
        cells += [repr(c) for c in point.conductances]
        cells.append(repr(point.rho))
        cells += [repr(v) for v in point.eigenvalues[1:]]
        cells.append(repr(point.lambda1_rho))
        cells.append(repr(point.lambdamax_rho))
        if with_reference:
            ref, err = _reference_rho(args.family, point)
            cells += [repr(ref), repr(err)]
            if np.isfinite(err):
                max_reference_err = max(max_reference_err, abs(err))
        lines.append(",".join(cells))
    lines.append(f"# skipped {skipped} infeasible grid points of {len(grid)}")
    if with_reference:
        lines.append(
            f"# reference formula: max |rho - {_fmt(spec.target_rho)}| = {_fmt(max_reference_err)}"
        )
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_search(args) -> int:
    report = search_counterexample(args.n, restarts=args.restarts,
                                   iters_per_restart=args.iters, seed=args.seed)
    base = unit_cycle_baseline(args.n)
    print(f"n {report.n}  restarts {report.trials}  iters {args.iters}  seed {report.seed}")
    print(f"unit cycle: lambda1 {_fmt(base.lambda1)}  lambda_max {_fmt(base.lambda_max)}  rho {_fmt(base.rho)}")
    print(f"baseline_low {_fmt(report.baseline_low)}  baseline_high {_fmt(report.baseline_high)}")
    print(f"best_max_product {_fmt(report.best_max_product)}  at "
          + " ".join(_fmt(c) for c in report.best_max_conductances))
    print(f"best_min_product {_fmt(report.best_min_product)}  at "
          + " ".join(_fmt(c) for c in report.best_min_conductances))
    print(f"margin {_fmt(report.margin)}")
    if args.out:
        n = report.n
        headers = (["restart", "max_product", "min_product"]
                   + [f"max_c_{k}" for k in range(n)] + [f"min_c_{k}" for k in range(n)])
        lines = [",".join(headers)]
        for rec in report.per_restart:
            cells = [str(rec.restart), repr(rec.max_product), repr(rec.min_product)]
            cells += [repr(c) for c in rec.max_conductances]
            cells += [repr(c) for c in rec.min_conductances]
            lines.append(",".join(cells))
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")
    if report.counterexample:
        print("COUNTEREXAMPLE FOUND")
        return 10
    print("no counterexample found")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohmlab",
        description="Effective-resistance metrics, Laplacian spectra, and extremal "
                    "eigenvalue experiments on weighted cycles.",
    )
    parser.add_argument("--tol", type=float, default=None,
                        help="override the command's default tolerance "
                             "(eigensolver threshold for spectrum, bound tolerance for verify)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resistance", help="resistance distance between two vertices of a graph file")
    p.add_argument("graph", help="edge-list graph file")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(handler=_cmd_resistance)

    p = sub.add_parser("rho", help="global resistance (sum over adjacent pairs) of a graph file")
    p.add_argument("graph")
    p.set_defaults(handler=_cmd_rho)

    p = sub.add_parser("spectrum", help="ascending Laplacian eigenvalues of a graph file")
    p.add_argument("graph")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("verify", help="check lambda1*rho <= 6 <= lambda2*rho for a 3-cycle")
    p.add_argument("c01", type=float)
    p.add_argument("c02", type=float)
    p.add_argument("c12", type=float)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("figure", help="emit CSV data for a catalogued conductance family")
    p.add_argument("family", choices=sorted(FIGURE_FAMILIES))
    p.add_argument("lo", type=float)
    p.add_argument("hi", type=float)
    p.add_argument("steps", type=int)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(handler=_cmd_figure)

    p = sub.add_parser("search", help="search an n-cycle for product-bound counterexamples")
    p.add_argument("n", type=int)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="optional CSV of per-restart bests")
    p.set_defaults(handler=_cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GraphFormatError as exc:
        print(f"ohmlab: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"ohmlab: {exc}", file=sys.stderr)
        return 3
    except np.linalg.LinAlgError as exc:
        print(f"ohmlab: {exc}", file=sys.stderr)
        return 4
    except (InfeasibleFamilyError, ValueError) as exc:
        print(f"ohmlab: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ohmlab: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
