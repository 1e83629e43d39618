"""
Transverse-field mixer vs. pairwise XY mixer
============================================

The X mixer starts in |+>^N and leaks probability into layouts with the wrong
number of sensors. The XY mixer starts in a Dicke state and never leaves it.
"""
from qaoa_osp import OspProblem, QaoaConfig, estimate_cost, run_qaoa_circuit
from qaoa_osp.statevector import weight_outside

problem = OspProblem.from_case("shear16")
beta1, gamma_p = 1.0, 3.0

for mixer in ("x", "xy"):
    config = QaoaConfig(p=7, mixer=mixer)
    state = run_qaoa_circuit(problem.ising(mixer), config, beta1, gamma_p)
    est = estimate_cost(state, problem, 1000, seed=1)
    print(f"{mixer:>2}: mass outside 4 sensors {weight_outside(state, 4):.3f}, "
          f"avg ratio {est.avg_ratio:.3f}, best {est.best_ratio:.3f}")

# exact expectation (no sampling noise) for comparison
state = run_qaoa_circuit(problem.ising_xy, QaoaConfig(p=7), beta1, gamma_p)
print("xy exact avg ratio:", round(estimate_cost(state, problem, 0, seed=0).avg_ratio, 4))
