"""Derivative-free tuning of ``(beta1, gamma_p)`` and the multistart protocol."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .errors import InvalidParameterError, NumericalFailureError
from .qaoa import CostEstimate, derive_seed, evaluate_point

BETA_RANGE = (-np.pi, np.pi)
GAMMA_RANGE = (-2 * np.pi, 2 * np.pi)
DEFAULT_BOUNDS = (BETA_RANGE, GAMMA_RANGE)
DEFAULT_BUDGET = 150
DEFAULT_RESTARTS = 50
INITIAL_RADIUS = 0.5
FINAL_RADIUS = 1e-4


@dataclass
class OptimizeResult:
    best_params: tuple
    best_objective: float
    evaluations: int
    trace: list = field(repr=False)
    message: str = ""


def minimize_derivative_free(objective, start, bounds=DEFAULT_BOUNDS, budget=DEFAULT_BUDGET,
                             initial_radius=INITIAL_RADIUS, final_radius=FINAL_RADIUS):
    """COBYLA on a black-box ``objective(params) -> float``.

    Trial points are clipped into ``bounds`` before evaluation, so every
    traced point is inside the box. Stops after ``budget`` evaluations or
    once the trust radius falls below ``final_radius``.
    """
    if int(budget) != budget or budget < 3:
        raise InvalidParameterError(f"budget must be an integer >= 3, got {budget}")
    lo = np.array([b[0] for b in bounds], dtype=float)
    hi = np.array([b[1] for b in bounds], dtype=float)
    if lo.shape != np.shape(start) or np.any(lo > hi):
        raise InvalidParameterError(f"bounds {bounds} do not define a box for start {start}")
    trace = []

    def wrapped(x):
        x = np.clip(x, lo, hi)
        value = float(objective(x))
        if not np.isfinite(value):
            raise NumericalFailureError(f"objective returned {value} at {x.tolist()}", value)
        trace.append((tuple(float(v) for v in x), value))
        return value

    res = minimize(wrapped, np.clip(np.asarray(start, dtype=float), lo, hi), method="COBYLA",
                   options={"rhobeg": initial_radius, "tol": final_radius, "maxiter": int(budget)})
    best = min(range(len(trace)), key=lambda i: trace[i][1])
    return OptimizeResult(trace[best][0], trace[best][1], len(trace), trace, str(res.message))


@dataclass
class RestartResult:
    run_id: int
    seed: int
    start: tuple
    result: OptimizeResult
    final: CostEstimate


@dataclass
class MultistartSummary:
    runs: list
    mean: float
    std: float


def restart_plan(restarts, seed, bounds=DEFAULT_BOUNDS):
    """Per-restart ``(seed, start)`` drawn uniformly from ``bounds``."""
    plan = []
    for r in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(r,)))
        start = tuple(float(rng.uniform(lo, hi)) for lo, hi in bounds)
        plan.append((derive_seed(seed, r), start))
    return plan


def _run_restart(args):
    problem, config, run_id, seed, start, budget, bounds = args
    cache = {}

    def objective(x):
        est = evaluate_point(problem, config, x[0], x[1], seed=seed)
        cache[(float(x[0]), float(x[1]))] = est
        return 1.0 - est.avg_ratio

    res = minimize_derivative_free(objective, start, bounds=bounds, budget=budget)
    return RestartResult(run_id, seed, start, res, cache[res.best_params])


def multistart_optimize(problem, config, restarts=DEFAULT_RESTARTS, seed=0, budget=DEFAULT_BUDGET,
                        bounds=DEFAULT_BOUNDS, workers=1):
    """Independent COBYLA runs from uniform random starts.

    Each run minimizes ``1 - avg_ratio``, reusing its own sampling seed on
    every evaluation so the objective is a deterministic function of the
    parameters. Mean and (population) standard deviation are taken over the
    final average ratios.
    """
    if int(restarts) != restarts or restarts < 1:
        raise InvalidParameterError(f"restarts must be a positive integer, got {restarts}")
    tasks = [(problem, config, r, s, start, budget, bounds)
             for r, (s, start) in enumerate(restart_plan(restarts, seed, bounds))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_run_restart, tasks))
    else:
        runs = [_run_restart(t) for t in tasks]
    finals = np.array([r.final.avg_ratio for r in runs])
    return MultistartSummary(runs, float(finals.mean()), float(finals.std()))
