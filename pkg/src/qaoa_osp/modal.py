"""Structural models and their undamped modal analysis.

Both built-in case studies are assembled in SI units (N/m, kg). The modal
solve works on the symmetric form ``M^-1/2 K M^-1/2``, which is valid
because every model here has a diagonal, positive mass matrix.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError, NumericalFailureError

# Warren truss member properties
TRUSS_E = 215e9          # Pa
TRUSS_AREA = 5e-5        # m^2
TRUSS_DENSITY = 7750.0   # kg/m^3
TRUSS_LENGTH = 2.0       # m


@dataclass(frozen=True)
class StructuralModel:
    stiffness: np.ndarray
    mass_diagonal: np.ndarray
    dof_labels: tuple
    # unconstrained assembly kept for inspection; None for models built reduced
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        k = np.asarray(self.stiffness, dtype=float)
        m = np.asarray(self.mass_diagonal, dtype=float)
        if k.ndim != 2 or k.shape[0] != k.shape[1]:
            raise InvalidParameterError(f"stiffness must be square, got shape {k.shape}")
        if m.shape != (k.shape[0],):
            raise InvalidParameterError("mass_diagonal length must match stiffness size")
        if len(self.dof_labels) != k.shape[0]:
            raise InvalidParameterError("one label per degree of freedom is required")
        if np.any(m <= 0):
            raise InvalidParameterError("every lumped mass must be strictly positive")
        object.__setattr__(self, "stiffness", k)
        object.__setattr__(self, "mass_diagonal", m)
        object.__setattr__(self, "dof_labels", tuple(self.dof_labels))

    @property
    def n_dof(self):
        return self.stiffness.shape[0]

    @property
    def mass(self):
        return np.diag(self.mass_diagonal)

    def is_symmetric(self, rtol=1e-9):
        k = self.stiffness
        scale = max(np.abs(k).max(), np.finfo(float).tiny)
        return np.abs(k - k.T).max() <= rtol * scale


@dataclass(frozen=True)
class ModalBasis:
    """Squared natural frequencies (ascending) and mass-normalized mode shapes.

    Column ``i`` of ``mode_shapes`` is the mode belonging to
    ``frequencies_sq[i]``.
    """

    frequencies_sq: np.ndarray
    mode_shapes: np.ndarray

    @property
    def n_modes(self):
        return self.frequencies_sq.shape[0]

    @property
    def frequencies(self):
        return np.sqrt(self.frequencies_sq)

    def residuals(self, model):
        k, m = model.stiffness, model.mass_diagonal
        kphi = k @ self.mode_shapes
        mphi = m[:, None] * self.mode_shapes
        r = np.linalg.norm(kphi - mphi * self.frequencies_sq, axis=0)
        return r / np.linalg.norm(kphi, axis=0)


def build_shear_building(n_stories, story_stiffness, story_mass):
    """Shear building with one lateral DOF per story, fixed at the base.

    Story ``i`` (1-based) sits between inter-story springs ``i`` and ``i+1``;
    the top story has only the spring below it.
    """
    if int(n_stories) != n_stories or n_stories < 1:
        raise InvalidParameterError(f"n_stories must be a positive integer, got {n_stories}")
    if story_stiffness <= 0 or story_mass <= 0:
        raise InvalidParameterError("story stiffness and mass must be positive")
    n = int(n_stories)
    k = float(story_stiffness)
    K = np.zeros((n, n))
    idx = np.arange(n)
    K[idx, idx] = 2.0 * k
    K[n - 1, n - 1] = k
    K[idx[:-1], idx[1:]] = -k
    K[idx[1:], idx[:-1]] = -k
    labels = [f"story {i + 1}" for i in range(n)]
    return StructuralModel(K, np.full(n, float(story_mass)), labels)


def warren_truss_geometry():
    """Node coordinates and member connectivity of the 19-member Warren truss.

    Bottom chord nodes 0..5 at x = 0, 2, ..., 10 m; top chord nodes 6..10 at
    x = 1, 3, ..., 9 m and height sqrt(3) m, so every member is 2 m long.
    """
    h = np.sqrt(TRUSS_LENGTH**2 - (TRUSS_LENGTH / 2) ** 2)
    nodes = [(2.0 * i, 0.0) for i in range(6)] + [(2.0 * i + 1.0, h) for i in range(5)]
    members = [(i, i + 1) for i in range(5)]
    members += [(6 + i, 7 + i) for i in range(4)]
    for i in range(5):
        members += [(i, 6 + i), (6 + i, i + 1)]
    return np.array(nodes), members


def _node_name(node):
    return f"bottom node {node + 1}" if node < 6 else f"top node {node - 5}"


def build_warren_truss():
    nodes, members = warren_truss_geometry()
    n_full = 2 * len(nodes)
    K = np.zeros((n_full, n_full))
    m = np.zeros(n_full)
    for a, b in members:
        d = nodes[b] - nodes[a]
        length = np.hypot(*d)
        c, s = d / length
        t = np.array([-c, -s, c, s])
        dofs = [2 * a, 2 * a + 1, 2 * b, 2 * b + 1]
        K[np.ix_(dofs, dofs)] += TRUSS_E * TRUSS_AREA / length * np.outer(t, t)
        m[dofs] += TRUSS_DENSITY * TRUSS_AREA * length / 2.0

    # pin at bottom-left (x and y), roller at bottom-right (y)
    fixed = {0, 1, 2 * 5 + 1}
    free = [d for d in range(n_full) if d not in fixed]
    labels = [f"{_node_name(d // 2)} {'horizontal' if d % 2 == 0 else 'vertical'}" for d in free]
    info = {
        "n_nodes": len(nodes),
        "n_members": len(members),
        "n_dof_unconstrained": n_full,
        "free_dofs": free,
        "member_axial_stiffness": TRUSS_E * TRUSS_AREA / TRUSS_LENGTH,
    }
    return StructuralModel(K[np.ix_(free, free)], m[free], labels, info)


def solve_modal(model, residual_tol=1e-6):
    """Solve ``K phi = w^2 M phi`` for all modes, mass-normalized and ascending."""
    if not model.is_symmetric():
        asym = np.abs(model.stiffness - model.stiffness.T).max()
        raise NumericalFailureError(f"stiffness matrix is not symmetric (max |K - K^T| = {asym:.3e})", asym)
    inv_sqrt_m = 1.0 / np.sqrt(model.mass_diagonal)
    A = model.stiffness * inv_sqrt_m[:, None] * inv_sqrt_m[None, :]
    A = 0.5 * (A + A.T)
    w2, V = np.linalg.eigh(A)
    if w2[0] <= 0:
        raise NumericalFailureError(f"stiffness is not positive definite (smallest eigenvalue {w2[0]:.3e})", w2[0])
    phi = V * inv_sqrt_m[:, None]
    basis = ModalBasis(w2, phi)
    res = basis.residuals(model)
    if res.max() > residual_tol:
        raise NumericalFailureError(f"eigen-residual {res.max():.3e} exceeds {residual_tol:g}", res.max())
    return basis


def model_to_dict(model, modal=None):
    if modal is None:
        modal = solve_modal(model)
    return {
        "n_dof": model.n_dof,
        "stiffness": model.stiffness.tolist(),
        "mass_diagonal": model.mass_diagonal.tolist(),
        "frequencies_sq": modal.frequencies_sq.tolist(),
        # one inner list per mode
        "mode_shapes": modal.mode_shapes.T.tolist(),
        "dof_labels": list(model.dof_labels),
    }


SHEAR16 = dict(n_stories=16, story_stiffness=1e9, story_mass=625e3)


def build_case(name):
    """Return one of the two built-in models: ``"shear16"`` or ``"truss19"``."""
    if name == "shear16":
        return build_shear_building(**SHEAR16)
    if name == "truss19":
        return build_warren_truss()
    raise InvalidParameterError(f"unknown case {name!r}; expected 'shear16' or 'truss19'")
