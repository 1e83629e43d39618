import numpy as np
import pytest

from qaoa_osp.errors import InvalidParameterError, NumericalFailureError
from qaoa_osp.modal import (StructuralModel, build_case, build_shear_building, build_warren_truss,
                            model_to_dict, solve_modal, warren_truss_geometry)


def test_two_story_shear_matrices():
    m = build_shear_building(2, 1.0, 1.0)
    np.testing.assert_array_equal(m.stiffness, [[2, -1], [-1, 1]])
    np.testing.assert_array_equal(m.mass_diagonal, [1, 1])
    assert m.dof_labels == ("story 1", "story 2")


def test_single_story():
    m = build_shear_building(1, 3.5, 2.0)
    np.testing.assert_array_equal(m.stiffness, [[3.5]])
    np.testing.assert_array_equal(m.mass_diagonal, [2.0])


def test_sixteen_story_case_is_banded():
    m = build_case("shear16")
    assert m.n_dof == 16
    assert m.dof_labels[0] == "story 1" and m.dof_labels[-1] == "story 16"
    i, j = np.indices(m.stiffness.shape)
    assert np.all(m.stiffness[np.abs(i - j) > 1] == 0)
    assert m.stiffness[0, 0] == 2e9 and m.stiffness[-1, -1] == 1e9 and m.stiffness[0, 1] == -1e9
    np.testing.assert_array_equal(m.mass_diagonal, np.full(16, 625e3))


@pytest.mark.parametrize("args", [(0, 1.0, 1.0), (2, -1.0, 1.0), (2, 1.0, 0.0), (1.5, 1.0, 1.0)])
def test_shear_rejects_bad_input(args):
    with pytest.raises(InvalidParameterError):
        build_shear_building(*args)


def test_truss_counts():
    nodes, members = warren_truss_geometry()
    assert len(nodes) == 11 and len(members) == 19
    lengths = [np.hypot(*(nodes[b] - nodes[a])) for a, b in members]
    np.testing.assert_allclose(lengths, 2.0, rtol=1e-12)
    m = build_warren_truss()
    assert m.n_dof == 19
    assert m.info["n_dof_unconstrained"] == 22
    # E A / L = 215e9 * 5e-5 / 2
    assert m.info["member_axial_stiffness"] == pytest.approx(5.375e6, rel=1e-12)


def test_truss_lumped_masses_by_hand():
    # rho A L / 2 = 7750 * 5e-5 * 2 / 2 = 0.3875 kg per member end
    m = build_warren_truss()
    assert m.dof_labels[0] == "bottom node 2 horizontal"
    # bottom node 2: two chords + two diagonals
    np.testing.assert_allclose(m.mass_diagonal[:2], 4 * 0.3875, rtol=1e-12)
    # top node 1: one chord + two diagonals
    assert m.dof_labels[9] == "top node 1 horizontal"
    np.testing.assert_allclose(m.mass_diagonal[9:11], 3 * 0.3875, rtol=1e-12)
    # the roller node keeps only its horizontal DOF
    assert m.dof_labels[8] == "bottom node 6 horizontal"
    assert m.mass_diagonal[8] == pytest.approx(2 * 0.3875)


def test_two_dof_eigenvalues_closed_form():
    modal = solve_modal(build_shear_building(2, 1.0, 1.0))
    np.testing.assert_allclose(modal.frequencies_sq, [(3 - np.sqrt(5)) / 2, (3 + np.sqrt(5)) / 2], rtol=1e-12)


def test_scalar_mode_is_mass_normalized():
    modal = solve_modal(build_shear_building(1, 8.0, 2.0))
    assert modal.frequencies_sq[0] == pytest.approx(4.0)
    assert abs(modal.mode_shapes[0, 0]) == pytest.approx(1 / np.sqrt(2.0))


@pytest.mark.parametrize("case", ["shear16", "truss19"])
def test_modal_invariants(case):
    model = build_case(case)
    modal = solve_modal(model)
    assert modal.residuals(model).max() <= 1e-6
    gram = modal.mode_shapes.T @ (model.mass_diagonal[:, None] * modal.mode_shapes)
    np.testing.assert_allclose(np.diag(gram), 1.0, atol=1e-9)
    assert np.abs(gram - np.diag(np.diag(gram))).max() <= 1e-8
    assert np.all(np.diff(modal.frequencies_sq) >= 0)


@pytest.mark.parametrize("c", [0.25, 3.0, 1e3])
def test_stiffness_scaling_covariance(c):
    model = build_case("truss19")
    scaled = StructuralModel(c * model.stiffness, model.mass_diagonal, model.dof_labels)
    a, b = solve_modal(model), solve_modal(scaled)
    np.testing.assert_allclose(b.frequencies_sq, c * a.frequencies_sq, rtol=1e-9)
    signs = np.sign(np.sum(a.mode_shapes * b.mode_shapes, axis=0))
    np.testing.assert_allclose(b.mode_shapes * signs, a.mode_shapes, atol=1e-8)


def test_asymmetric_stiffness_fails():
    model = StructuralModel(np.array([[2.0, -1.0], [-0.5, 1.0]]), [1.0, 1.0], ["a", "b"])
    with pytest.raises(NumericalFailureError) as err:
        solve_modal(model)
    assert err.value.residual == pytest.approx(0.5)


def test_indefinite_stiffness_fails():
    model = StructuralModel(np.array([[1.0, 2.0], [2.0, 1.0]]), [1.0, 1.0], ["a", "b"])
    with pytest.raises(NumericalFailureError):
        solve_modal(model)


def test_nonpositive_mass_rejected():
    with pytest.raises(InvalidParameterError):
        StructuralModel(np.eye(2), [1.0, 0.0], ["a", "b"])


def test_model_json_layout():
    model = build_shear_building(3, 2.0, 1.0)
    d = model_to_dict(model)
    assert set(d) == {"n_dof", "stiffness", "mass_diagonal", "frequencies_sq", "mode_shapes", "dof_labels"}
    assert d["stiffness"][0] == [4.0, -2.0, 0.0]
    modal = solve_modal(model)
    # one list per mode
    np.testing.assert_allclose(d["mode_shapes"][1], modal.mode_shapes[:, 1])
