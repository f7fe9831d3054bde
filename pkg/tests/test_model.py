import numpy as np
import pytest

from orthoglide import DesignRequirements, MechanismGeometry, canonical_frame


def test_frame_axes_and_isotropic_point():
    frame = canonical_frame()
    np.testing.assert_array_equal(frame.axis(0), [1, 0, 0])
    np.testing.assert_array_equal(frame.axis(2), [0, 0, 1])
    np.testing.assert_array_equal(frame.isotropic_point, [0, 0, 0])
    np.testing.assert_array_equal(frame.diagonal_point(-2.5), [-2.5, -2.5, -2.5])


def test_corners_on_diagonal(geom):
    np.testing.assert_array_equal(geom.Q1, [geom.q1] * 3)
    np.testing.assert_array_equal(geom.Q2, [geom.q2] * 3)
    assert geom.q1 < 0 < geom.q2


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(workspace_edge=0.0, psi_max=2.0),
        dict(workspace_edge=-1.0, psi_max=2.0),
        dict(workspace_edge=200.0, psi_max=2.0, tool_offset=-1.0),
        dict(workspace_edge=200.0, psi_max=float("nan")),
    ],
)
def test_requirements_rejects_invalid(kwargs):
    with pytest.raises(ValueError):
        DesignRequirements(**kwargs)


def test_psi_min_is_reciprocal():
    assert DesignRequirements(100.0, 2.5).psi_min == pytest.approx(0.4, abs=1e-15)


def test_synthesized_geometry_satisfies_invariants(geom):
    assert geom.check(workspace_edge=200.0) == []
    assert np.linalg.norm(geom.Q1) < geom.leg_length
    assert np.linalg.norm(geom.Q2) < geom.leg_length


def test_check_flags_tampered_geometry(geom):
    import dataclasses

    bad = dataclasses.replace(geom, leg_length=0.9 * geom.leg_length)
    assert any("base_offset" in msg for msg in bad.check())


def test_geometry_basic_validation():
    with pytest.raises(ValueError):
        MechanismGeometry(leg_length=-1, tool_offset=0, base_offset=0, rho_max=1, q1=-1, q2=1)
    with pytest.raises(ValueError):
        MechanismGeometry(leg_length=1, tool_offset=0, base_offset=0, rho_max=1, q1=1, q2=-1)


def test_scaled_multiplies_every_length(geom):
    s = geom.scaled(3.0)
    for name in ("leg_length", "tool_offset", "base_offset", "rho_max", "q1", "q2"):
        assert getattr(s, name) == pytest.approx(3.0 * getattr(geom, name), rel=1e-15)
