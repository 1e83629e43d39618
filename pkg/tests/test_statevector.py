from functools import reduce
from math import comb

import numpy as np
import pytest
from scipy.linalg import expm
from scipy.stats import chisquare

from qaoa_osp import statevector as sv
from qaoa_osp.errors import InvalidParameterError, ResourceLimitError
from qaoa_osp.qaoa import cost_layer_gates
from qaoa_osp.qubo import IsingCoefficients, ising_diagonal_oracle
from qaoa_osp.subspace import FixedWeightSubspace


def pauli_on(op, q, n):
    """``op`` on qubit ``q`` (1-based, qubit 1 = leftmost kron factor)."""
    return reduce(np.kron, [op if j == q else np.eye(2) for j in range(1, n + 1)])


def random_state(n, rng):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return sv.StateVector(n, v / np.linalg.norm(v))


def random_unitary(k, rng):
    a = rng.normal(size=(2**k, 2**k)) + 1j * rng.normal(size=(2**k, 2**k))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_hadamard_on_first_qubit():
    s = sv.apply_single_qubit_gate(sv.StateVector.basis(2, 0), sv.H, 1)
    np.testing.assert_allclose(s.amplitudes, [2**-0.5, 0, 2**-0.5, 0], atol=1e-15)


def test_x_on_second_qubit():
    s = sv.apply_single_qubit_gate(sv.StateVector.basis(2, 0), sv.X, 2)
    np.testing.assert_allclose(s.amplitudes, [0, 1, 0, 0])


@pytest.mark.parametrize("bits,expected", [([1, 0], [1, 1]), ([0, 1], [0, 1]), ([1, 1], [1, 0])])
def test_cnot_truth_table(bits, expected):
    s = sv.apply_two_qubit_gate(sv.StateVector.from_bits(bits), sv.CX, 1, 2)
    np.testing.assert_allclose(s.amplitudes, sv.StateVector.from_bits(expected).amplitudes)


def test_cnot_with_reversed_roles():
    s = sv.apply_two_qubit_gate(sv.StateVector.from_bits([0, 1]), sv.CX, 2, 1)
    np.testing.assert_allclose(s.amplitudes, sv.StateVector.from_bits([1, 1]).amplitudes)


def test_rotation_identities():
    np.testing.assert_allclose(sv.rx(0.0), np.eye(2))
    np.testing.assert_allclose(sv.rx(2 * np.pi), -np.eye(2), atol=1e-15)
    for theta in (0.3, -1.7, 4.0):
        np.testing.assert_allclose(sv.rx(theta), expm(-0.5j * theta * sv.X), atol=1e-14)
        np.testing.assert_allclose(sv.ry(theta), expm(-0.5j * theta * sv.Y), atol=1e-14)
        np.testing.assert_allclose(sv.rz(theta), expm(-0.5j * theta * sv.Z), atol=1e-14)


def test_standard_gates_are_unitary():
    for g in (sv.H, sv.X, sv.Y, sv.Z, sv.CX, sv.CZ, sv.SWAP, sv.CCX, sv.xy_pair_gate(0.9)):
        assert sv.is_unitary(g)
    assert not sv.is_unitary(np.array([[1, 1], [0, 1]]))


def test_xy_pair_gate_matches_exponential():
    xx_yy = np.kron(sv.X, sv.X) + np.kron(sv.Y, sv.Y)
    for beta in (0.0, 0.4, 2.2, -1.1):
        np.testing.assert_allclose(sv.xy_pair_gate(beta), expm(0.25j * beta * xx_yy), atol=1e-14)


def test_xy_pair_gate_entries():
    g = sv.xy_pair_gate(np.pi)
    np.testing.assert_allclose(g, [[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], atol=1e-15)


def test_toffoli_against_oracle():
    u = sv.dense_circuit_oracle(3, [(sv.CCX, (1, 2, 3))])
    for m in range(8):
        s = sv.apply_gate(sv.StateVector.basis(3, m), sv.CCX, (1, 2, 3))
        np.testing.assert_allclose(s.amplitudes, u[:, m])
    # flips qubit 3 only when both controls are set
    assert np.argmax(u[:, 6]) == 7 and np.argmax(u[:, 5]) == 5


def test_oracle_matches_pauli_products():
    n = 3
    u = sv.dense_circuit_oracle(n, [(sv.X, (2,)), (sv.Z, (3,))])
    np.testing.assert_allclose(u, pauli_on(sv.Z, 3, n) @ pauli_on(sv.X, 2, n))
    # non-adjacent two-qubit placement
    u = sv.dense_circuit_oracle(n, [(sv.CX, (1, 3))])
    for m in range(8):
        target = m ^ 1 if m & 4 else m
        assert u[target, m] == 1


def test_random_circuit_matches_oracle():
    rng = np.random.default_rng(0)
    n = 4
    gates = []
    for _ in range(25):
        k = int(rng.integers(1, 4))
        qubits = tuple(int(q) for q in rng.choice(np.arange(1, n + 1), k, replace=False))
        gates.append((random_unitary(k, rng), qubits))
    state = random_state(n, rng)
    expected = sv.dense_circuit_oracle(n, gates) @ state.amplitudes
    for g, q in gates:
        sv.apply_gate(state, g, q)
    np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)


def test_plus_state():
    s = sv.prepare_plus_state(3)
    ref = reduce(np.kron, [sv.H @ [1, 0]] * 3)
    np.testing.assert_allclose(s.amplitudes, ref, atol=1e-15)


def test_dicke_state():
    s = sv.prepare_dicke(4, 2)
    support = np.flatnonzero(np.abs(s.amplitudes) > 0)
    np.testing.assert_array_equal(support, [3, 5, 6, 9, 10, 12])
    np.testing.assert_allclose(s.amplitudes[support], 1 / np.sqrt(6))
    assert sv.dicke_dimension(19, 4) == 3876


def test_x_mixer_layer_matches_exponential():
    rng = np.random.default_rng(1)
    n, beta = 4, 0.77
    sum_x = sum(pauli_on(sv.X, q, n) for q in range(1, n + 1))
    state = random_state(n, rng)
    expected = expm(-1j * beta * sum_x) @ state.amplitudes
    np.testing.assert_allclose(sv.apply_x_mixer_layer(state, beta).amplitudes, expected, atol=1e-13)


def test_cost_phase_matches_literal_gate_list():
    rng = np.random.default_rng(2)
    n = 4
    c = {(j, k): rng.normal() for j in range(n) for k in range(j + 1, n) if rng.random() < 0.8}
    ising = IsingCoefficients(1.3, rng.normal(size=n), c)
    diag = ising_diagonal_oracle(ising, include_constant=False)
    gamma = 0.61
    u = sv.dense_circuit_oracle(n, cost_layer_gates(ising, gamma))
    np.testing.assert_allclose(u, np.diag(np.exp(-1j * gamma * diag)), atol=1e-13)
    state = random_state(n, rng)
    expected = u @ state.amplitudes
    np.testing.assert_allclose(sv.apply_cost_phase(state, diag, gamma).amplitudes, expected, atol=1e-13)


def test_cost_phase_matches_pauli_hamiltonian():
    n = 3
    b = np.array([0.5, -1.0, 0.25])
    ising = IsingCoefficients(0.0, b, {(0, 2): 0.75})
    ham = sum(b[j] * pauli_on(sv.Z, j + 1, n) for j in range(n)) \
        + 0.75 * pauli_on(sv.Z, 1, n) @ pauli_on(sv.Z, 3, n)
    np.testing.assert_allclose(ising_diagonal_oracle(ising), np.diag(ham).real, atol=1e-15)


def test_xy_layer_matches_pair_sequence():
    rng = np.random.default_rng(3)
    n, beta = 5, 1.3
    gates = [(sv.xy_pair_gate(beta), pair) for pair in sv.xy_pairs(n)]
    state = random_state(n, rng)
    expected = sv.dense_circuit_oracle(n, gates) @ state.amplitudes
    np.testing.assert_allclose(sv.apply_xy_mixer_layer(state, beta).amplitudes, expected, atol=1e-13)


def test_xy_pair_order():
    assert sv.xy_pairs(3) == [(1, 2), (1, 3), (2, 3)]
    assert len(sv.xy_pairs(19)) == 171


def test_norm_preserved_over_many_gates():
    rng = np.random.default_rng(4)
    n = 8
    state = random_state(n, rng)
    diag = rng.normal(size=2**n)
    for i in range(100):
        kind = i % 4
        if kind == 0:
            sv.apply_single_qubit_gate(state, random_unitary(1, rng), int(rng.integers(1, n + 1)))
        elif kind == 1:
            q = rng.choice(np.arange(1, n + 1), 2, replace=False)
            sv.apply_two_qubit_gate(state, random_unitary(2, rng), int(q[0]), int(q[1]))
        elif kind == 2:
            sv.apply_cost_phase(state, diag, rng.normal())
        else:
            sv.apply_xy_mixer_layer(state, rng.normal())
    assert abs(state.norm() - 1) <= 1e-10


def test_xy_layers_conserve_hamming_weight():
    rng = np.random.default_rng(5)
    n = 7
    state = sv.prepare_dicke(n, 3)
    diag = rng.normal(size=2**n)
    for _ in range(10):
        sv.apply_cost_phase(state, diag, rng.uniform(0, 2 * np.pi))
        sv.apply_xy_mixer_layer(state, rng.uniform(0, np.pi))
    assert sv.weight_outside(state, 3) <= 1e-12
    # the X mixer does leak
    sv.apply_x_mixer_layer(state, 0.4)
    assert sv.weight_outside(state, 3) > 1e-3


@pytest.mark.parametrize("n,k", [(6, 2), (8, 3), (5, 1), (5, 5)])
def test_subspace_kernel_equals_full_kernel(n, k):
    rng = np.random.default_rng(n * 10 + k)
    sub = FixedWeightSubspace(n, k)
    assert sub.dim == comb(n, k)
    vec = rng.normal(size=sub.dim) + 1j * rng.normal(size=sub.dim)
    full = sub.embed(vec.copy())
    for beta in (0.3, 2.1):
        sub.apply_xy_mixer_layer(vec, beta)
        sv.apply_xy_mixer_layer(full, beta)
    np.testing.assert_allclose(vec, sub.restrict(full.amplitudes), atol=1e-13)
    assert sv.weight_outside(full, k) <= 1e-25


def test_sampling_distribution_chi_square():
    probs = np.array([0.1, 0.4, 0.0, 0.2, 0.3, 0.0, 0.0, 0.0])
    state = sv.StateVector(3, np.sqrt(probs))
    shots = 20000
    bits = sv.sample_bitstrings(state, shots, seed=123)
    assert bits.shape == (shots, 3)
    idx = bits.astype(int) @ [4, 2, 1]
    counts = np.bincount(idx, minlength=8)
    assert counts[probs == 0].sum() == 0
    nz = probs > 0
    assert chisquare(counts[nz], probs[nz] * shots).pvalue > 1e-3


def test_sampling_is_seeded_and_non_destructive():
    state = sv.prepare_plus_state(4)
    before = state.amplitudes.copy()
    a = sv.sample_bitstrings(state, 50, seed=9)
    b = sv.sample_bitstrings(state, 50, seed=9)
    np.testing.assert_array_equal(a, b)
    np.testing.assert_array_equal(state.amplitudes, before)


def test_expectation_of_diagonal():
    state = sv.prepare_plus_state(2)
    assert sv.expectation_of_diagonal(state, [1.0, 2.0, 3.0, 4.0]) == pytest.approx(2.5)


def test_errors():
    s = sv.StateVector.basis(2, 0)
    with pytest.raises(InvalidParameterError):
        sv.apply_single_qubit_gate(s, sv.H, 3)
    with pytest.raises(InvalidParameterError):
        sv.apply_single_qubit_gate(s, sv.CX, 1)
    with pytest.raises(InvalidParameterError):
        sv.apply_two_qubit_gate(s, sv.CX, 1, 1)
    with pytest.raises(InvalidParameterError):
        sv.apply_cost_phase(s, [1.0, 2.0], 0.1)
    with pytest.raises(InvalidParameterError):
        sv.sample_bitstrings(s, 0, seed=1)
    with pytest.raises(ResourceLimitError):
        sv.prepare_plus_state(sv.MAX_QUBITS + 1)
    with pytest.raises(ResourceLimitError):
        sv.dense_circuit_oracle(7, [])
    with pytest.raises(InvalidParameterError):
        sv.prepare_dicke(3, 4)
