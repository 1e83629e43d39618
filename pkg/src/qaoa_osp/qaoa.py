"""p-layer QAOA for cardinality-constrained sensor placement.

Two mixers are supported:

``"x"``
    Transverse-field mixer from ``|+>^N``; the sensor count is enforced by a
    quadratic penalty in the cost Hamiltonian.
``"xy"``
    Pairwise full mixer from a Dicke state; the sensor count is conserved by
    construction, so no penalty is used.

The MSE objective is divided by its exact optimum before it is encoded, so
the feasible part of the cost diagonal is ``-ratio`` and the angles have the
same meaning for any structure or unit system.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import _kernels
from . import statevector as sv
from .errors import InvalidParameterError, ResourceLimitError
from .exhaustive import optimum_value
from .modal import build_case, solve_modal
from .qubo import (add_cardinality_penalty, build_mse_qubo, default_alpha, ising_diagonal_oracle,
                   qubo_to_ising, qubo_values_all)
from .subspace import FixedWeightSubspace

MIXERS = ("x", "xy")
INFEASIBLE_SCORES = ("zero", "raw")
SCHEDULE_FLOOR = 0.01 * np.pi
# amplitudes with probability below this count as unreachable in exact mode
EXACT_SUPPORT_TOL = 1e-12


@dataclass(frozen=True)
class Schedule:
    betas: np.ndarray
    gammas: np.ndarray

    @property
    def p(self):
        return len(self.betas)


def linear_schedule(beta1, gamma_p, p):
    """Linear ramps: beta from ``beta1`` down to ``0.01 pi``, gamma from ``0.01 pi`` up to ``gamma_p``.

    With ``p == 1`` the ramps are undefined, and the two free parameters are
    used directly.
    """
    if int(p) != p or p < 1:
        raise InvalidParameterError(f"layer count p must be a positive integer, got {p}")
    p = int(p)
    if p == 1:
        return Schedule(np.array([float(beta1)]), np.array([float(gamma_p)]))
    j = np.arange(p)
    gammas = (gamma_p - SCHEDULE_FLOOR) / (p - 1) * j + SCHEDULE_FLOOR
    betas = beta1 - (beta1 - SCHEDULE_FLOOR) / (p - 1) * j
    return Schedule(betas, gammas)


@dataclass(frozen=True)
class QaoaConfig:
    p: int
    mixer: str = "xy"
    shots: int = 1000          # 0 selects exact expectations
    n_s: int = 4
    alpha: float = None        # penalty weight on the normalized scale; None -> default_alpha
    seed: int = 0
    infeasible_score: str = "zero"

    def __post_init__(self):
        if int(self.p) != self.p or self.p < 1:
            raise InvalidParameterError(f"p must be a positive integer, got {self.p}")
        if self.mixer not in MIXERS:
            raise InvalidParameterError(f"mixer must be one of {MIXERS}, got {self.mixer!r}")
        if int(self.shots) != self.shots or self.shots < 0:
            raise InvalidParameterError(f"shots must be a non-negative integer, got {self.shots}")
        if self.infeasible_score not in INFEASIBLE_SCORES:
            raise InvalidParameterError(f"infeasible_score must be one of {INFEASIBLE_SCORES}")
        if self.alpha is not None and not self.alpha > 0:
            raise InvalidParameterError(f"alpha must be positive, got {self.alpha}")


class CostEstimate(NamedTuple):
    avg_ratio: float
    best_ratio: float
    feasible_fraction: float


@dataclass
class OspProblem:
    """Everything the circuit and the scorer need for one structure and sensor count."""

    model: object
    n_s: int = 4
    alpha: float = None
    name: str = ""
    modal: object = field(init=False)
    mse_qubo: object = field(init=False)
    optimum: float = field(init=False)

    def __post_init__(self):
        n = self.model.n_dof
        if int(self.n_s) != self.n_s or not 1 <= self.n_s <= n:
            raise InvalidParameterError(f"n_s must be in [1, {n}], got {self.n_s}")
        self.modal = solve_modal(self.model)
        self.mse_qubo = build_mse_qubo(self.modal, self.model)
        self.optimum = optimum_value(self.mse_qubo, self.n_s)
        if self.alpha is None:
            self.alpha = default_alpha(self.objective, self.n_s)
        elif not self.alpha > 0:
            raise InvalidParameterError(f"alpha must be positive, got {self.alpha}")

    @classmethod
    def from_case(cls, name, n_s=4, alpha=None):
        return cls(build_case(name), n_s=n_s, alpha=alpha, name=name)

    @property
    def n(self):
        return self.model.n_dof

    @cached_property
    def objective(self):
        """MSE divided by its feasible optimum (maximize)."""
        return self.mse_qubo.scaled(1.0 / self.optimum)

    @cached_property
    def penalized(self):
        return add_cardinality_penalty(self.objective, self.n_s, self.alpha)

    @cached_property
    def ising_x(self):
        return qubo_to_ising(self.penalized)

    @cached_property
    def ising_xy(self):
        return qubo_to_ising(self.objective.negated())

    def ising(self, mixer):
        return self.ising_x if mixer == "x" else self.ising_xy

    @cached_property
    def subspace(self):
        return FixedWeightSubspace(self.n, self.n_s)

    @cached_property
    def cost_diag_x(self):
        return ising_diagonal_oracle(self.ising_x, include_constant=False)

    @cached_property
    def cost_diag_xy_sub(self):
        diag = ising_diagonal_oracle(self.ising_xy, include_constant=False)
        return self.subspace.restrict(diag)

    @cached_property
    def ratio_full(self):
        """Raw MSE ratio of every basis state (feasible or not)."""
        return qubo_values_all(self.mse_qubo) / self.optimum

    @cached_property
    def feasible_full(self):
        return sv.hamming_weights(self.n) == self.n_s

    @cached_property
    def ratio_sub(self):
        return self.ratio_full[self.subspace.indices]

    def score_table(self, infeasible_score="zero"):
        """Per-basis-state score used by ``estimate_cost``."""
        if infeasible_score == "raw":
            return self.ratio_full
        return np.where(self.feasible_full, self.ratio_full, 0.0)


def _check_size(n):
    if n > sv.MAX_QUBITS:
        raise ResourceLimitError(f"{n} qubits exceeds the simulator limit of {sv.MAX_QUBITS}")


def run_qaoa_circuit(ising, config, beta1, gamma_p, diag=None, on_layer=None):
    """Full-register QAOA state after ``config.p`` cost/mixer layers.

    ``diag`` may carry a precomputed cost diagonal (constant term dropped).
    ``on_layer(j, state)`` is called after each completed layer.
    """
    n = ising.n_vars
    _check_size(n)
    schedule = linear_schedule(beta1, gamma_p, config.p)
    if diag is None:
        diag = ising_diagonal_oracle(ising, include_constant=False)
    if config.mixer == "x":
        state = sv.prepare_plus_state(n)
        mix = sv.apply_x_mixer_layer
    else:
        state = sv.prepare_dicke(n, config.n_s)
        mix = sv.apply_xy_mixer_layer
    for j, (beta, gamma) in enumerate(zip(schedule.betas, schedule.gammas), start=1):
        sv.apply_cost_phase(state, diag, gamma)
        mix(state, beta)
        if on_layer is not None:
            on_layer(j, state)
    return state


def run_problem_circuit(problem, config, beta1, gamma_p):
    """Fast path used by the experiments.

    Returns ``(probabilities, support)`` where ``support`` holds the full
    basis indices the probabilities belong to (``None`` means all ``2^N``).
    The XY mixer runs on the Dicke sector only.
    """
    schedule = linear_schedule(beta1, gamma_p, config.p)
    if config.mixer == "x":
        state = run_qaoa_circuit(problem.ising_x, config, beta1, gamma_p, diag=problem.cost_diag_x)
        return state.probabilities(), None
    sub = problem.subspace
    vec = sub.dicke()
    diag = problem.cost_diag_xy_sub
    for beta, gamma in zip(schedule.betas, schedule.gammas):
        _kernels.diagonal_phase(vec, diag, float(gamma))
        sub.apply_xy_mixer_layer(vec, beta)
    return vec.real**2 + vec.imag**2, sub.indices


def _estimate(probs, scores, feasible, shots, seed):
    if shots == 0:
        reach = probs > EXACT_SUPPORT_TOL
        total = probs.sum()
        avg = float(probs @ scores / total)
        best = float(scores[reach].max()) if reach.any() else 0.0
        frac = float(probs[feasible].sum() / total)
        return CostEstimate(avg, best, frac)
    rng = np.random.default_rng(seed)
    idx = sv.sample_indices(probs, shots, rng)
    s = scores[idx]
    return CostEstimate(float(s.mean()), float(s.max()), float(feasible[idx].mean()))


def estimate_cost(state, problem, n_e, seed, infeasible_score="zero"):
    """Average and best approximation ratio over ``n_e`` measurements of ``state``.

    Feasible samples score ``MSE(x) / MSE_opt``; samples with the wrong
    number of sensors score 0 (or their raw ratio with
    ``infeasible_score="raw"``). ``n_e == 0`` weighs every basis state by its
    exact probability instead of sampling.
    """
    if int(n_e) != n_e or n_e < 0:
        raise InvalidParameterError(f"n_e must be a non-negative integer, got {n_e}")
    if state.n_qubits != problem.n:
        raise InvalidParameterError("state and problem sizes differ")
    return _estimate(state.probabilities(), problem.score_table(infeasible_score),
                     problem.feasible_full, int(n_e), seed)


def derive_seed(master, *key):
    """Deterministic 63-bit child seed for task ``key`` (independent of execution order)."""
    ss = np.random.SeedSequence(int(master), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))


def evaluate_point(problem, config, beta1, gamma_p, seed=None):
    """Circuit plus scoring at one ``(beta1, gamma_p)``; the experiments' black box."""
    seed = config.seed if seed is None else seed
    probs, support = run_problem_circuit(problem, config, beta1, gamma_p)
    if support is None:
        return _estimate(probs, problem.score_table(config.infeasible_score),
                         problem.feasible_full, config.shots, seed)
    return _estimate(probs, problem.ratio_sub, np.ones(support.size, dtype=bool), config.shots, seed)


def approximation_ratio(value, optimum):
    if not optimum > 0:
        raise InvalidParameterError(f"optimum must be positive, got {optimum}")
    return value / optimum


def cost_layer_gates(ising, gamma):
    """Literal gate list for ``exp(-i gamma H_cost)`` without the global phase.

    One ``Rz(2 gamma b_j)`` per qubit, then ``CX, Rz(2 gamma c_jk), CX`` for
    every nonzero pair.
    """
    gates = [(sv.rz(2 * gamma * bj), (j + 1,)) for j, bj in enumerate(ising.b)]
    for (j, k), v in sorted(ising.c.items()):
        if v == 0:
            continue
        gates += [(sv.CX, (j + 1, k + 1)), (sv.rz(2 * gamma * v), (k + 1,)), (sv.CX, (j + 1, k + 1))]
    return gates


def gate_count(ising, p):
    """Elementary gates of the literal circuit: ``p (3Q + N) + N``.

    ``N`` initialization gates, then per layer ``N`` single-Z rotations and
    three gates for each of the ``Q`` nonzero pair terms. The mixer is not
    included, since the cost encoding dominates the scaling.
    """
    n = ising.n_vars
    layer = len(cost_layer_gates(ising, 0.0))
    q = sum(1 for v in ising.c.values() if v != 0)
    return {
        "n": n,
        "p": p,
        "quadratic_terms": q,
        "initialization": n,
        "cost_per_layer": layer,
        "cost_per_layer_bound": (3 * n * n - n) // 2,
        "x_mixer_per_layer": n,
        "total": p * layer + n,
    }
