"""Brute-force ranking of every fixed-size sensor subset."""
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import InvalidParameterError, ResourceLimitError
from .qubo import MAXIMIZE

MAX_SUBSETS = 10**7
# relative gap below which two MSE values count as tied
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class RankedSolution:
    rank: int
    locations: tuple   # 1-based, ascending
    mse: float
    ratio: float


def subset_values(qubo, subsets):
    """Objective value of each row of ``subsets`` (0-based variable indices)."""
    S = np.asarray(subsets, dtype=np.int64)
    Q = qubo.quadratic_matrix()
    Q = Q + Q.T
    vals = qubo.offset + qubo.linear[S].sum(axis=1)
    k = S.shape[1]
    for a in range(k):
        for b in range(a + 1, k):
            vals += Q[S[:, a], S[:, b]]
    return vals


def exhaustive_search(qubo, n_s, top=None):
    """All ``C(N, n_s)`` subsets ranked by descending objective.

    Ties (within ``TIE_RTOL`` of the best value) are ordered
    lexicographically on the location tuple.
    """
    if qubo.sense != MAXIMIZE:
        raise InvalidParameterError("exhaustive_search ranks a maximization objective")
    n = qubo.n_vars
    if int(n_s) != n_s or not 1 <= n_s <= n:
        raise InvalidParameterError(f"n_s must be in [1, {n}], got {n_s}")
    if comb(n, n_s) > MAX_SUBSETS:
        raise ResourceLimitError(f"C({n}, {n_s}) = {comb(n, n_s)} subsets exceeds {MAX_SUBSETS}")
    subsets = np.array(list(combinations(range(n), n_s)), dtype=np.int64)
    vals = subset_values(qubo, subsets)
    best = vals.max()
    if best <= 0:
        raise InvalidParameterError("approximation ratios need a positive optimum")
    quantized = np.round(vals / best / TIE_RTOL)
    # lexsort: last key is primary
    order = np.lexsort(tuple(subsets[:, j] for j in range(n_s - 1, -1, -1)) + (-quantized,))
    if top is not None:
        order = order[:top]
    best = vals[order[0]]
    # tied sets may exceed the rank-1 value by rounding noise
    return [RankedSolution(r + 1, tuple(int(i) + 1 for i in subsets[j]), float(vals[j]),
                           min(float(vals[j] / best), 1.0))
            for r, j in enumerate(order)]


def optimum_value(qubo, n_s):
    """Largest objective over all subsets of size ``n_s`` (the exact maximum, ignoring tie order)."""
    if comb(qubo.n_vars, n_s) > MAX_SUBSETS:
        raise ResourceLimitError(f"C({qubo.n_vars}, {n_s}) subsets exceeds {MAX_SUBSETS}")
    subsets = np.array(list(combinations(range(qubo.n_vars), n_s)), dtype=np.int64)
    return float(subset_values(qubo, subsets).max())
