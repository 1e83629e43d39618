"""Dense statevector simulation with in-place gate kernels.

Qubits are numbered from 1, and qubit 1 is the most significant bit of the
amplitude index (``|q1 q2 ... qN>``). Kernels never build the ``2^N x 2^N``
operator; ``dense_circuit_oracle`` does, and exists only to check them.
"""
from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels
from .errors import InvalidParameterError, ResourceLimitError
from .qubo import index_to_bits

MAX_QUBITS = 24
MAX_ORACLE_QUBITS = 6

I2 = np.eye(2, dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
CX = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
CZ = np.diag([1, 1, 1, -1]).astype(complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
CCX = np.eye(8, dtype=complex)
CCX[6:, 6:] = X


def rx(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def ry(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta):
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def xy_pair_gate(beta):
    """Pairwise full-mixer gate: rotates within span{|01>, |10>}, identity on |00>, |11>."""
    c, s = np.cos(beta / 2), np.sin(beta / 2)
    g = np.eye(4, dtype=complex)
    g[1, 1] = g[2, 2] = c
    g[1, 2] = g[2, 1] = 1j * s
    return g


def is_unitary(u, tol=1e-10):
    u = np.asarray(u)
    return u.ndim == 2 and u.shape[0] == u.shape[1] and np.allclose(
        u.conj().T @ u, np.eye(u.shape[0]), atol=tol, rtol=0)


@dataclass
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ResourceLimitError(f"qubit count must be in [1, {MAX_QUBITS}], got {self.n_qubits}")
        amps = np.ascontiguousarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_qubits,):
            raise InvalidParameterError(
                f"expected {2**self.n_qubits} amplitudes for {self.n_qubits} qubits, got {amps.shape}")
        self.amplitudes = amps

    @classmethod
    def basis(cls, n, index):
        amps = np.zeros(2**n, dtype=complex)
        amps[index] = 1.0
        return cls(n, amps)

    @classmethod
    def from_bits(cls, bits):
        idx = int("".join(str(int(b)) for b in bits), 2)
        return cls.basis(len(bits), idx)

    def probabilities(self):
        return self.amplitudes.real**2 + self.amplitudes.imag**2

    def norm(self):
        return float(self.probabilities().sum())

    def copy(self):
        return StateVector(self.n_qubits, self.amplitudes.copy())


def _check_qubit_count(n):
    if int(n) != n or not 1 <= n <= MAX_QUBITS:
        raise ResourceLimitError(f"qubit count must be an integer in [1, {MAX_QUBITS}], got {n}")


def prepare_plus_state(n):
    """Hadamard on every qubit of ``|0...0>``."""
    _check_qubit_count(n)
    return StateVector(n, np.full(2**n, 2.0 ** (-n / 2), dtype=complex))


def hamming_weights(n):
    idx = np.arange(2**n, dtype=np.int64)
    w = np.zeros(idx.size, dtype=np.int64)
    for j in range(n):
        w += (idx >> j) & 1
    return w


def prepare_dicke(n, n_s):
    """Equal superposition over all basis states with exactly ``n_s`` ones."""
    _check_qubit_count(n)
    if int(n_s) != n_s or not 0 <= n_s <= n:
        raise InvalidParameterError(f"Dicke weight must be an integer in [0, {n}], got {n_s}")
    amps = np.where(hamming_weights(n) == n_s, 1.0 / np.sqrt(comb(n, n_s)), 0.0).astype(complex)
    return StateVector(n, amps)


def _check_qubit(state, q):
    if int(q) != q or not 1 <= q <= state.n_qubits:
        raise InvalidParameterError(f"qubit index {q} outside 1..{state.n_qubits}")


def apply_single_qubit_gate(state, gate, q):
    """Apply a 2x2 unitary to qubit ``q`` in place and return ``state``."""
    _check_qubit(state, q)
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (2, 2):
        raise InvalidParameterError(f"single-qubit gate must be 2x2, got {gate.shape}")
    n = state.n_qubits
    view = state.amplitudes.reshape(2 ** (q - 1), 2, 2 ** (n - q))
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = gate[0, 0] * a0 + gate[0, 1] * a1
    view[:, 1, :] = gate[1, 0] * a0 + gate[1, 1] * a1
    return state


def apply_gate(state, gate, qubits):
    """Apply a ``2^k x 2^k`` unitary to the listed qubits (first listed = most significant)."""
    qubits = list(qubits)
    for q in qubits:
        _check_qubit(state, q)
    if len(set(qubits)) != len(qubits):
        raise InvalidParameterError(f"gate qubits must be distinct, got {qubits}")
    k = len(qubits)
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (2**k, 2**k):
        raise InvalidParameterError(f"a {k}-qubit gate must be {2**k}x{2**k}, got {gate.shape}")
    n = state.n_qubits
    axes = [q - 1 for q in qubits]
    t = np.moveaxis(state.amplitudes.reshape((2,) * n), axes, list(range(k)))
    out = (gate @ t.reshape(2**k, -1)).reshape(t.shape)
    state.amplitudes[:] = np.moveaxis(out, list(range(k)), axes).reshape(-1)
    return state


def apply_two_qubit_gate(state, gate, q1, q2):
    """Apply a 4x4 unitary to ``(q1, q2)``, with ``q1`` as the high bit of the gate's basis."""
    if q1 == q2:
        raise InvalidParameterError(f"two-qubit gate needs distinct qubits, got {q1} twice")
    if np.asarray(gate).shape != (4, 4):
        raise InvalidParameterError("two-qubit gate must be 4x4")
    return apply_gate(state, gate, (q1, q2))


def _check_diag(state, diag):
    diag = np.asarray(diag, dtype=float)
    if diag.shape != state.amplitudes.shape:
        raise InvalidParameterError(
            f"diagonal has length {diag.size}, state has {state.amplitudes.size} amplitudes")
    return diag


def apply_cost_phase(state, diag, gamma):
    """Multiply amplitude ``m`` by ``exp(-i gamma diag[m])``."""
    diag = _check_diag(state, diag)
    if gamma != 0:
        _kernels.diagonal_phase(state.amplitudes, diag, float(gamma))
    return state


def apply_x_mixer_layer(state, beta):
    """``Rx(2 beta)`` on every qubit, i.e. ``exp(-i beta sum_j X_j)``."""
    _kernels.x_mixer_layer(state.amplitudes, state.n_qubits, float(beta))
    return state


def xy_pairs(n):
    """Qubit pairs of the full mixer in application order: (1,2), (1,3), ..., (n-1,n)."""
    return [(k, m) for k in range(1, n + 1) for m in range(k + 1, n + 1)]


def apply_xy_mixer_layer(state, beta):
    """Pairwise full-mixer gate on every qubit pair, in ``xy_pairs`` order.

    This is the gate sequence, not ``exp`` of the summed XY Hamiltonian;
    overlapping pair gates do not commute, so the order is part of the
    definition.
    """
    _kernels.xy_mixer_layer(state.amplitudes, state.n_qubits, float(beta))
    return state


def sample_indices(probs, shots, rng):
    """Draw basis-state indices by inverse-CDF lookup; ``probs`` need not be exactly normalized."""
    if int(shots) != shots or shots < 1:
        raise InvalidParameterError(f"shots must be a positive integer, got {shots}")
    cdf = np.cumsum(probs)
    u = rng.random(int(shots)) * cdf[-1]
    return np.minimum(np.searchsorted(cdf, u, side="right"), cdf.size - 1)


def sample_bitstrings(state, shots, seed):
    """Measure ``shots`` times in the computational basis without collapsing ``state``.

    Returns a ``(shots, n_qubits)`` uint8 array, qubit 1 in column 0.
    """
    rng = np.random.default_rng(seed)
    idx = sample_indices(state.probabilities(), shots, rng)
    return index_to_bits(idx, state.n_qubits)


def expectation_of_diagonal(state, diag):
    diag = _check_diag(state, diag)
    return float(state.probabilities() @ diag)


def _embed(gate, qubits, n):
    """Full ``2^n`` operator of ``gate`` acting on ``qubits`` (1-based, first = high bit)."""
    k = len(qubits)
    if list(qubits) == list(range(qubits[0], qubits[0] + k)):
        left = np.eye(2 ** (qubits[0] - 1))
        right = np.eye(2 ** (n - qubits[-1]))
        return np.kron(np.kron(left, gate), right)
    idx = np.arange(2**n)
    sub = np.zeros(2**n, dtype=np.int64)
    rest = idx.copy()
    for q in qubits:
        bit = (idx >> (n - q)) & 1
        sub = (sub << 1) | bit
        rest &= ~(1 << (n - q))
    same_rest = rest[:, None] == rest[None, :]
    return np.where(same_rest, gate[sub[:, None], sub[None, :]], 0.0)


def dense_circuit_oracle(n, gates):
    """Consolidated unitary ``U_k ... U_2 U_1`` of a gate list.

    ``gates`` holds ``(matrix, qubits)`` pairs applied first to last, with
    qubits 1-based. Test-scale only.
    """
    if n > MAX_ORACLE_QUBITS:
        raise ResourceLimitError(f"dense oracle is limited to {MAX_ORACLE_QUBITS} qubits, got {n}")
    if n < 1:
        raise InvalidParameterError("need at least one qubit")
    total = np.eye(2**n, dtype=complex)
    for gate, qubits in gates:
        qubits = tuple(qubits)
        gate = np.asarray(gate, dtype=complex)
        if gate.shape != (2 ** len(qubits),) * 2:
            raise InvalidParameterError(f"gate shape {gate.shape} does not match qubits {qubits}")
        if len(set(qubits)) != len(qubits) or not all(1 <= q <= n for q in qubits):
            raise InvalidParameterError(f"bad qubit placement {qubits} for {n} qubits")
        total = _embed(gate, qubits, n) @ total
    return total


def weight_outside(state, weight):
    """Probability mass on basis states whose Hamming weight differs from ``weight``."""
    probs = state.probabilities()
    return float(probs[hamming_weights(state.n_qubits) != weight].sum())


def dicke_dimension(n, n_s):
    return comb(n, n_s)
