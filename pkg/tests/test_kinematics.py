import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoglide import (
    DegenerateError,
    JointLimitError,
    MechanismGeometry,
    NoSolutionError,
    OutOfReachError,
    forward_kinematics,
    inverse_kinematics,
    jacobians,
    leg_postures,
)
from orthoglide.model import cyclic

from conftest import cube_points, hand_geometry

GEOM = hand_geometry()


def loop_closure_error(geom, p, rho):
    """Independent check: build B_i and C_i and measure |C_i - B_i| - L."""
    errs, axial = [], []
    for i in range(3):
        n = np.eye(3)[i]
        B = (geom.base_offset + rho[i]) * n
        C = np.asarray(p) - geom.tool_offset * n
        errs.append(np.linalg.norm(C - B) - geom.leg_length)
        axial.append((C - B) @ n)
    return np.array(errs), np.array(axial)


def test_ik_isotropic_point(geom):
    rho = inverse_kinematics(geom, [0, 0, 0])
    np.testing.assert_allclose(rho, np.full(3, 73.205), atol=1e-3)
    # rho_iso = -a - L - e
    np.testing.assert_allclose(rho, -geom.base_offset - geom.leg_length - geom.tool_offset, rtol=1e-13)


def test_ik_at_q2_is_full_stroke(geom):
    rho = inverse_kinematics(geom, geom.Q2, enforce_limits=True)
    np.testing.assert_allclose(rho, np.full(3, 256.993), atol=1e-3)
    np.testing.assert_allclose(rho, geom.rho_max, rtol=1e-13)


def test_ik_zero_stroke_at_face_point(geom):
    rho = inverse_kinematics(geom, [0, geom.q1, 0], enforce_limits=True)
    assert rho[1] == pytest.approx(0.0, abs=1e-9 * geom.leg_length)


def test_ik_at_q1(geom):
    # rho(Q1) = L - L sqrt(16/18), not rho_min
    L = geom.leg_length
    rho = inverse_kinematics(geom, geom.Q1)
    np.testing.assert_allclose(rho, L - L * np.sqrt(16 / 18), rtol=1e-12)
    np.testing.assert_allclose(rho, np.full(3, 17.7625), atol=1e-4)


def test_ik_out_of_reach(geom):
    with pytest.raises(OutOfReachError) as info:
        inverse_kinematics(geom, [0, geom.leg_length + 1, 0])
    assert info.value.leg in (0, 2)


def test_ik_joint_limit(geom):
    inverse_kinematics(geom, [130, 130, 130])
    with pytest.raises(JointLimitError):
        inverse_kinematics(geom, [130, 130, 130], enforce_limits=True)


def test_ik_satisfies_loop_closure(geom, rng):
    for p in cube_points(geom, 200, rng):
        rho = inverse_kinematics(geom, p)
        err, axial = loop_closure_error(geom, p, rho)
        assert np.all(np.abs(err) < 1e-9 * geom.leg_length)
        assert np.all(axial > 0)


def test_ik_batch_matches_pointwise(geom, rng):
    pts = cube_points(geom, 100, rng)
    batch = inverse_kinematics(geom, pts)
    for p, r in zip(pts, batch):
        assert np.array_equal(inverse_kinematics(geom, p), r)


@pytest.mark.parametrize(
    "point",
    [
        lambda g: np.zeros(3),
        lambda g: g.Q2,
        lambda g: g.Q1,
    ],
)
def test_fk_inverts_ik_examples(geom, point):
    p = point(geom)
    np.testing.assert_allclose(forward_kinematics(geom, inverse_kinematics(geom, p)), p, atol=1e-10 * geom.leg_length)


def test_fk_rounded_stroke_values(geom):
    np.testing.assert_allclose(forward_kinematics(geom, [73.205] * 3), [0, 0, 0], atol=2e-3)
    np.testing.assert_allclose(forward_kinematics(geom, [256.993] * 3), [126.795] * 3, atol=2e-3)
    np.testing.assert_allclose(forward_kinematics(geom, [17.7625] * 3), [-73.205] * 3, atol=2e-3)


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.floats(GEOM.q1, GEOM.q2)] * 3))
def test_round_trip_property(p):
    p = np.array(p)
    back = forward_kinematics(GEOM, inverse_kinematics(GEOM, p))
    assert np.linalg.norm(back - p) < 1e-9 * GEOM.leg_length


def test_fk_batch(geom, rng):
    pts = cube_points(geom, 500, rng)
    back = forward_kinematics(geom, inverse_kinematics(geom, pts))
    assert np.max(np.linalg.norm(back - pts, axis=1)) < 1e-9 * geom.leg_length


def test_fk_no_solution(geom):
    with pytest.raises(NoSolutionError):
        forward_kinematics(geom, [1000.0, 0.0, 0.0])


def test_fk_degenerate(geom):
    r = -geom.base_offset - geom.tool_offset
    with pytest.raises(DegenerateError):
        forward_kinematics(geom, [r, r, 0.0])


def test_postures_isotropic(geom):
    for leg in leg_postures(geom, [0, 0, 0]):
        assert leg.theta == 0.0 and leg.beta == 0.0


def test_postures_q2_magnitudes(geom):
    for leg in leg_postures(geom, geom.Q2):
        assert abs(leg.theta) == pytest.approx(np.arctan(0.5), abs=1e-12)
        assert abs(leg.beta) == pytest.approx(np.arctan(1 / np.sqrt(5)), abs=1e-12)
        assert np.degrees(abs(leg.theta)) == pytest.approx(26.565, abs=1e-3)
        assert np.degrees(abs(leg.beta)) == pytest.approx(24.095, abs=1e-3)


@pytest.mark.parametrize("c", np.linspace(-150, 150, 13))
def test_postures_diagonal_identities(geom, c):
    legs = leg_postures(geom, [c, c, c])
    thetas = [leg.theta for leg in legs]
    betas = [leg.beta for leg in legs]
    assert np.ptp(thetas) < 1e-14 and np.ptp(betas) < 1e-14
    assert np.tan(betas[0]) == pytest.approx(-np.sin(thetas[0]), abs=1e-12)


def test_postures_reconstruct_link_direction(geom, rng):
    for p in cube_points(geom, 50, rng):
        for i, leg in enumerate(leg_postures(geom, p)):
            a, b, c = cyclic(i)
            u = np.empty(3)
            u[a] = np.cos(leg.theta) * np.cos(leg.beta)
            u[b] = np.sin(leg.theta) * np.cos(leg.beta)
            u[c] = -np.sin(leg.beta)
            np.testing.assert_allclose(u, leg.link_dir, atol=1e-12)
            assert np.linalg.norm(leg.link_dir) == pytest.approx(1.0, abs=1e-12)
            assert leg.link_dir[i] >= 0


def test_postures_chain_heights(geom, rng):
    # z from leg 1 and from leg 2 in the cyclic convention
    for p in cube_points(geom, 20, rng):
        legs = leg_postures(geom, p)
        L = geom.leg_length
        assert p[2] == pytest.approx(-np.sin(legs[0].beta) * L, abs=1e-10 * L)
        assert p[2] == pytest.approx(np.sin(legs[1].theta) * np.cos(legs[1].beta) * L, abs=1e-10 * L)


def test_jacobians_isotropic(geom):
    jac = jacobians(geom, [0, 0, 0])
    np.testing.assert_allclose(jac.J_inv, np.eye(3), atol=1e-15)
    np.testing.assert_allclose(jac.A, geom.leg_length * np.eye(3), atol=1e-12)
    assert not jac.serial_singular


def test_jacobians_structure(geom, rng):
    for p in cube_points(geom, 30, rng):
        jac = jacobians(geom, p)
        rho = inverse_kinematics(geom, p)
        for i in range(3):
            n = np.eye(3)[i]
            link = (p - geom.tool_offset * n) - (geom.base_offset + rho[i]) * n
            np.testing.assert_allclose(jac.A[i], link, atol=1e-10)
            assert jac.B_diag[i] == pytest.approx(link @ n, abs=1e-10)
            np.testing.assert_allclose(jac.J_inv[i], link / (link @ n), atol=1e-12)
        np.testing.assert_allclose(jac.B @ jac.J_inv, jac.A, atol=1e-9)


@pytest.mark.parametrize("c", np.linspace(-120, 170, 100))
def test_jacobian_diagonal_closed_form(geom, c):
    s = np.sqrt(geom.leg_length**2 - 2 * c * c)
    expected = np.full((3, 3), c / s)
    np.fill_diagonal(expected, 1.0)
    np.testing.assert_allclose(jacobians(geom, [c, c, c]).J_inv, expected, atol=1e-10, rtol=0)


def test_serial_singular_flag():
    geom = MechanismGeometry(leg_length=5.0, tool_offset=0.0, base_offset=-6.0, rho_max=5.0, q1=-1.0, q2=1.0)
    jac = jacobians(geom, [0.0, 3.0, 4.0])
    assert jac.serial_singular and jac.J_inv is None
    assert jac.B_diag[0] == 0.0
    assert jac.A.shape == (3, 3)


def test_eta_positive_whenever_limits_hold(geom, rng):
    pts = rng.uniform(geom.q1 - 80, geom.q2 + 80, size=(2000, 3))
    for p in pts:
        try:
            inverse_kinematics(geom, p, enforce_limits=True)
        except (OutOfReachError, JointLimitError):
            continue
        assert np.all(jacobians(geom, p).B_diag > 0)
