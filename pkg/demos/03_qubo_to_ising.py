"""
From QUBO to Pauli-Z coefficients
=================================

A small penalized QUBO is turned into Ising coefficients (a, b, c), and the
diagonal they define is compared with direct evaluation on every bitstring.
"""
import numpy as np

from qaoa_osp import QuboProblem, add_cardinality_penalty, gate_count, qubo_to_ising
from qaoa_osp.qubo import all_bitstrings, evaluate_qubo, ising_diagonal_oracle

# a made-up 4-variable objective to maximize, with a "pick two" constraint
f = QuboProblem([1.0, 0.5, 0.8, 0.2], {(0, 1): 0.3, (1, 2): -0.4, (2, 3): 0.6}, sense="maximize")
penalized = add_cardinality_penalty(f, n_s=2, alpha=3.0)

ising = qubo_to_ising(penalized)
print("a =", round(ising.a, 4))
print("b =", np.round(ising.b, 4))
print("c =", {k: round(v, 4) for k, v in ising.c.items()})

diag = ising_diagonal_oracle(ising)
direct = np.array([evaluate_qubo(penalized, x) for x in all_bitstrings(4)])
print("max |diagonal - direct| =", np.abs(diag - direct).max())

# lowest energy = best feasible layout
best = all_bitstrings(4)[np.argmin(diag)]
print("ground state bits:", best)

# the literal circuit for one cost layer grows quadratically with N
print(gate_count(ising, p=3))
