"""
Multistart COBYLA on the truss
==============================

Ten random starts of the two-parameter linear schedule at p = 7, XY mixer.
The full 50-restart experiment is ``qaoa-osp optimize --case truss19 ...``.
"""
from qaoa_osp import OspProblem, QaoaConfig, multistart_optimize

problem = OspProblem.from_case("truss19")
summary = multistart_optimize(problem, QaoaConfig(p=7, mixer="xy"), restarts=10, seed=7, budget=150)

for run in summary.runs:
    b, g = run.result.best_params
    print(f"run {run.run_id}: start ({run.start[0]:+.2f}, {run.start[1]:+.2f}) -> ({b:+.2f}, {g:+.2f})"
          f" in {run.result.evaluations} evals, avg ratio {run.final.avg_ratio:.3f}")
print(f"mean {summary.mean:.3f} +/- {summary.std:.3f}")
