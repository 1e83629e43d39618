"""QUBO objectives, the cardinality penalty, and the Pauli-Z (Ising) encoding.

Variables are 0-based internally. Whenever a bitstring is mapped to a
basis-state index, variable 0 is the most significant bit, so the ket
``|x1 x2 ... xN>`` reads left to right as the binary digits of the index.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolationError, InvalidParameterError, ResourceLimitError

MAXIMIZE = "maximize"
MINIMIZE = "minimize"
MAX_ORACLE_VARS = 20


def _pair(p, q):
    if p == q:
        raise InvalidParameterError(f"quadratic term on a single variable ({p}); fold it into linear")
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True)
class QuboProblem:
    """``offset + sum_p linear[p] x_p + sum_{p<q} quadratic[(p, q)] x_p x_q``."""

    linear: np.ndarray
    quadratic: dict = field(default_factory=dict)
    offset: float = 0.0
    sense: str = MINIMIZE

    def __post_init__(self):
        lin = np.array(self.linear, dtype=float)
        if lin.ndim != 1 or lin.size == 0:
            raise InvalidParameterError("linear coefficients must be a non-empty 1-D sequence")
        if self.sense not in (MAXIMIZE, MINIMIZE):
            raise InvalidParameterError(f"sense must be {MAXIMIZE!r} or {MINIMIZE!r}")
        quad = {}
        for (p, q), v in self.quadratic.items():
            key = _pair(int(p), int(q))
            if not 0 <= key[0] < key[1] < lin.size:
                raise InvalidParameterError(f"quadratic index {key} out of range")
            quad[key] = quad.get(key, 0.0) + float(v)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "quadratic", quad)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def n_vars(self):
        return self.linear.size

    def quadratic_matrix(self):
        """Strictly upper-triangular matrix of the pair coefficients."""
        Q = np.zeros((self.n_vars, self.n_vars))
        for (p, q), v in self.quadratic.items():
            Q[p, q] = v
        return Q

    def max_abs_coefficient(self):
        vals = [np.abs(self.linear).max()] + [abs(v) for v in self.quadratic.values()]
        return float(max(vals))

    def scaled(self, factor):
        return QuboProblem(self.linear * factor,
                           {k: v * factor for k, v in self.quadratic.items()},
                           self.offset * factor, self.sense)

    def negated(self):
        """Same minimizers as the maximizers of ``self``, with the other sense."""
        flipped = MINIMIZE if self.sense == MAXIMIZE else MAXIMIZE
        return QuboProblem(-self.linear, {k: -v for k, v in self.quadratic.items()},
                           -self.offset, flipped)

    def to_dict(self):
        return {
            "n_vars": self.n_vars,
            "sense": self.sense,
            "offset": self.offset,
            "linear": self.linear.tolist(),
            "quadratic": [[p, q, v] for (p, q), v in sorted(self.quadratic.items())],
        }


@dataclass(frozen=True)
class IsingCoefficients:
    """``a I + sum_j b[j] Z_j + sum_{j<k} c[(j, k)] Z_j Z_k``.

    Each unordered pair appears once in ``c``.
    """

    a: float
    b: np.ndarray
    c: dict = field(default_factory=dict)

    @property
    def n_vars(self):
        return len(self.b)


def build_mse_qubo(modal, model):
    """Modal strain energy as a maximization QUBO over sensor-selection bits.

    The weight of the DOF pair ``(p, q)`` is ``sum_ij |phi_pi k_pq phi_qj|``,
    which factors into ``|k_pq| * s_p * s_q`` with ``s_p = sum_i |phi_pi|``.
    Diagonal pairs become linear terms because ``x_p**2 == x_p``.
    """
    phi = np.asarray(modal.mode_shapes)
    K = np.asarray(model.stiffness)
    if phi.shape[0] != K.shape[0]:
        raise InvalidParameterError(
            f"mode shapes have {phi.shape[0]} rows but the model has {K.shape[0]} DOFs")
    s = np.abs(phi).sum(axis=1)
    W = np.abs(K) * np.outer(s, s)
    n = K.shape[0]
    quad = {}
    for p in range(n):
        for q in range(p + 1, n):
            v = W[p, q] + W[q, p]
            if v != 0.0:
                quad[(p, q)] = v
    return QuboProblem(np.diag(W).copy(), quad, 0.0, MAXIMIZE)


def add_cardinality_penalty(qubo, n_s, alpha):
    """Minimization QUBO ``-f + alpha * (sum_p x_p - n_s)**2``.

    ``qubo`` must be a maximization objective; the sign flip happens here so
    that the returned problem can be handed straight to the circuit.
    """
    if qubo.sense != MAXIMIZE:
        raise ContractViolationError("the cardinality penalty is applied to a maximization objective")
    if int(n_s) != n_s or n_s < 0 or n_s > qubo.n_vars:
        raise InvalidParameterError(f"n_s must be an integer in [0, {qubo.n_vars}], got {n_s}")
    if not alpha > 0:
        raise InvalidParameterError(f"alpha must be positive, got {alpha}")
    base = qubo.negated()
    n = qubo.n_vars
    quad = dict(base.quadratic)
    for p in range(n):
        for q in range(p + 1, n):
            quad[(p, q)] = quad.get((p, q), 0.0) + 2.0 * alpha
    return QuboProblem(base.linear + alpha * (1.0 - 2.0 * n_s), quad,
                       base.offset + alpha * n_s**2, MINIMIZE)


def default_alpha(qubo, n_s):
    return 2.0 * qubo.max_abs_coefficient() * n_s


def evaluate_qubo(qubo, x):
    x = np.asarray(x)
    if x.shape != (qubo.n_vars,):
        raise InvalidParameterError(f"expected {qubo.n_vars} bits, got shape {x.shape}")
    if not np.all((x == 0) | (x == 1)):
        raise InvalidParameterError("bit entries must be 0 or 1")
    total = qubo.offset + float(qubo.linear @ x)
    for (p, q), v in qubo.quadratic.items():
        total += v * x[p] * x[q]
    return total


def evaluate_many(qubo, bits):
    """Vectorized ``evaluate_qubo`` over the rows of a 0/1 matrix."""
    X = np.asarray(bits, dtype=float)
    Q = qubo.quadratic_matrix()
    return qubo.offset + X @ qubo.linear + np.einsum("ij,ij->i", X @ Q, X)


def index_to_bits(index, n):
    """Bits of ``index`` with variable 0 as the most significant bit."""
    index = np.asarray(index, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((index[..., None] >> shifts) & 1).astype(np.uint8)


def bits_to_index(bits):
    bits = np.asarray(bits, dtype=np.int64)
    n = bits.shape[-1]
    return (bits << np.arange(n - 1, -1, -1, dtype=np.int64)).sum(axis=-1)


def all_bitstrings(n):
    if n > MAX_ORACLE_VARS:
        raise ResourceLimitError(f"refusing to enumerate 2^{n} bitstrings (limit 2^{MAX_ORACLE_VARS})")
    return index_to_bits(np.arange(2**n), n)


def qubo_to_ising(qubo):
    """Map a minimization QUBO to Pauli-Z coefficients.

    Uses ``x = (1 - z) / 2``: a linear term ``h x_p`` becomes
    ``h/2 - h/2 z_p`` and a pair term ``g x_p x_q`` becomes
    ``g/4 (1 - z_p - z_q + z_p z_q)``.
    """
    if qubo.sense != MINIMIZE:
        raise ContractViolationError("qubo_to_ising expects a minimization QUBO; negate maximization objectives first")
    a = qubo.offset + 0.5 * qubo.linear.sum()
    b = -0.5 * qubo.linear.copy()
    c = {}
    for (p, q), g in qubo.quadratic.items():
        a += g / 4.0
        b[p] -= g / 4.0
        b[q] -= g / 4.0
        c[(p, q)] = g / 4.0
    return IsingCoefficients(float(a), b, c)


def _bit_columns(n):
    if n > MAX_ORACLE_VARS:
        raise ResourceLimitError(f"refusing to enumerate 2^{n} basis states (limit 2^{MAX_ORACLE_VARS})")
    idx = np.arange(2**n, dtype=np.int64)
    return [((idx >> (n - 1 - j)) & 1).astype(np.int8) for j in range(n)]


def z_values(n):
    """Matrix of spin values (+1 for bit 0, -1 for bit 1), one row per basis state."""
    return np.stack([1 - 2 * col for col in _bit_columns(n)], axis=1).astype(float)


def qubo_values_all(qubo):
    """``evaluate_qubo`` at every basis-state index, without a 2^N x N float matrix."""
    cols = _bit_columns(qubo.n_vars)
    out = np.full(cols[0].size, qubo.offset)
    for p, h in enumerate(qubo.linear):
        if h:
            out += h * cols[p]
    for (p, q), g in qubo.quadratic.items():
        out += g * (cols[p] & cols[q])
    return out


def ising_diagonal_oracle(ising, include_constant=True):
    """Diagonal of the Ising operator, evaluated term by term on every basis state."""
    spins = [1 - 2 * col for col in _bit_columns(ising.n_vars)]
    diag = np.zeros(spins[0].size)
    for j, bj in enumerate(ising.b):
        if bj:
            diag += bj * spins[j]
    for (j, k), v in ising.c.items():
        diag += v * (spins[j] * spins[k])
    if include_constant:
        diag += ising.a
    return diag
