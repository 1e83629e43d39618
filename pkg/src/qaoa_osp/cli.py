"""Command-line entry point: ``python -m qaoa_osp <command> ...``."""
import argparse
import sys
from pathlib import Path

from . import io
from .errors import OspError
from .exhaustive import exhaustive_search
from .experiments import REFERENCE_TOP10, reference_diff, run_landscape_scan, run_optimization_experiment
from .modal import build_case, model_to_dict
from .optimize import DEFAULT_BUDGET, DEFAULT_RESTARTS
from .qaoa import OspProblem

CASES = ("shear16", "truss19")


def _common(sub):
    sub.add_argument("--case", choices=CASES, required=True)
    sub.add_argument("--out", required=True, help="output file")


def _qaoa_flags(sub):
    sub.add_argument("--mixer", choices=("x", "xy"), required=True)
    sub.add_argument("--p", type=int, required=True, help="QAOA layers")
    sub.add_argument("--shots", type=int, default=1000)
    sub.add_argument("--exact", action="store_true", help="exact expectations instead of sampling")
    sub.add_argument("--alpha", type=float, default=None,
                     help="penalty weight on the optimum-normalized scale (x mixer)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--sensors", type=int, default=4)
    sub.add_argument("--infeasible-score", choices=("zero", "raw"), default="zero")
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--dump-qubo", metavar="PATH", help="also write the QUBO coefficients as JSON")


def build_parser():
    parser = argparse.ArgumentParser(prog="qaoa-osp",
                                     description="QAOA sensor placement experiments on two benchmark structures")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("model", help="write stiffness, mass and modal data as JSON")
    _common(sub)

    sub = subs.add_parser("exhaustive", help="rank every sensor subset by modal strain energy")
    _common(sub)
    sub.add_argument("--sensors", type=int, default=4)
    sub.add_argument("--top", type=int, default=10)
    sub.add_argument("--diff-out", help="reference comparison CSV (default: <out stem>_reference_diff.csv)")

    sub = subs.add_parser("landscape", help="grid scan over (beta1, gamma_p)")
    _common(sub)
    _qaoa_flags(sub)
    sub.add_argument("--grid", type=int, default=50)
    sub.add_argument("--pgm", help="greyscale heatmap of avg_ratio")

    sub = subs.add_parser("optimize", help="multistart COBYLA runs")
    _common(sub)
    _qaoa_flags(sub)
    sub.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _dump_qubo(problem, path):
    io.write_json({
        "case": problem.name,
        "n_s": problem.n_s,
        "alpha": problem.alpha,
        "optimum_mse": problem.optimum,
        "mse": problem.mse_qubo.to_dict(),
        "penalized": problem.penalized.to_dict(),
    }, path)


def cmd_model(args):
    model = build_case(args.case)
    io.write_json(model_to_dict(model), args.out)
    print(f"{args.case}: {model.n_dof} DOFs -> {args.out}")


def cmd_exhaustive(args):
    problem = OspProblem.from_case(args.case, n_s=args.sensors)
    ranking = exhaustive_search(problem.mse_qubo, args.sensors, top=args.top)
    io.write_exhaustive_csv(ranking, args.out)
    print(f"{args.case}: best {io.join_locations(ranking[0].locations)} -> {args.out}")
    if args.sensors == 4 and args.case in REFERENCE_TOP10:
        out = Path(args.out)
        diff_path = args.diff_out or out.with_name(out.stem + "_reference_diff.csv")
        rows = reference_diff(args.case, problem)
        io.write_reference_diff_csv(rows, diff_path)
        matched = sum(r["match"] for r in rows)
        print(f"reference comparison: {matched}/{len(rows)} reference rows reproduced -> {diff_path}")


def cmd_landscape(args):
    problem = OspProblem.from_case(args.case, n_s=args.sensors, alpha=args.alpha)
    if args.dump_qubo:
        _dump_qubo(problem, args.dump_qubo)
    cells = run_landscape_scan(problem, args.mixer, args.p, grid_n=args.grid,
                               shots=0 if args.exact else args.shots, seed=args.seed,
                               infeasible_score=args.infeasible_score, workers=args.workers)
    io.write_landscape_csv(cells, args.p, args.mixer, args.out)
    if args.pgm:
        io.write_pgm(cells, args.grid, args.pgm)
    print(f"{len(cells)} cells, max avg_ratio {max(c.avg_ratio for c in cells):.4f} -> {args.out}")


def cmd_optimize(args):
    problem = OspProblem.from_case(args.case, n_s=args.sensors, alpha=args.alpha)
    if args.dump_qubo:
        _dump_qubo(problem, args.dump_qubo)
    summary = run_optimization_experiment(problem, args.mixer, args.p, restarts=args.restarts,
                                          budget=args.budget, shots=0 if args.exact else args.shots,
                                          seed=args.seed, infeasible_score=args.infeasible_score,
                                          workers=args.workers)
    io.write_runs_csv(summary, args.mixer, args.p, args.out)
    print(f"{len(summary.runs)} runs, final avg_ratio {summary.mean:.4f} +/- {summary.std:.4f} -> {args.out}")


COMMANDS = {"model": cmd_model, "exhaustive": cmd_exhaustive,
            "landscape": cmd_landscape, "optimize": cmd_optimize}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except OspError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0
