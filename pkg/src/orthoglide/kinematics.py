"""Inverse/forward kinematics, leg postures and Jacobians.

All array helpers accept points of shape ``(3,)`` or ``(..., 3)`` and work
component by component, so a batch evaluation returns exactly the same
floats as the corresponding single-point calls.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DegenerateError,
    JointLimitError,
    NoSolutionError,
    OutOfReachError,
)
from .model import JacobianSet, LegPosture, MechanismGeometry, cyclic

SERIAL_TOL = 1e-10  # |eta_i| < SERIAL_TOL * L flags a serial singularity
LIMIT_TOL = 1e-9  # stroke limits are checked to LIMIT_TOL * L
FK_TOL = 1e-12  # relative slack on the trilateration discriminant


def reach_radicand(geom: MechanismGeometry, p) -> np.ndarray:
    """``L^2 - p_j^2 - p_k^2`` for each leg; negative means out of reach."""
    p = np.asarray(p, dtype=float)
    L2 = geom.leg_length**2
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    return np.stack([L2 - y * y - z * z, L2 - z * z - x * x, L2 - x * x - y * y], axis=-1)


def axial_link_components(geom: MechanismGeometry, p) -> np.ndarray:
    """Link components along the own axis, ``eta_i``; NaN where out of reach."""
    rad = reach_radicand(geom, p)
    with np.errstate(invalid="ignore"):
        return np.where(rad >= 0, np.sqrt(np.maximum(rad, 0.0)), np.nan)


def joint_positions(geom: MechanismGeometry, p) -> np.ndarray:
    """Unchecked inverse kinematics: NaN for legs that cannot reach ``p``."""
    p = np.asarray(p, dtype=float)
    eta = axial_link_components(geom, p)
    return p - geom.tool_offset - geom.base_offset - eta


def stroke_violation(geom: MechanismGeometry, rho) -> np.ndarray:
    """Signed distance outside the stroke; positive means violated."""
    rho = np.asarray(rho, dtype=float)
    return np.maximum(geom.rho_min - rho, rho - geom.rho_max)


def within_stroke(geom: MechanismGeometry, rho) -> np.ndarray:
    return stroke_violation(geom, rho) <= LIMIT_TOL * geom.leg_length


def inverse_kinematics(geom: MechanismGeometry, p, enforce_limits: bool = False) -> np.ndarray:
    """Actuated joint positions ``rho`` for tool point(s) ``p``.

    Takes the assembly mode whose links point forward along their own axis.
    Raises :class:`OutOfReachError` when a leg cannot reach ``p`` and, with
    ``enforce_limits``, :class:`JointLimitError` when ``rho`` leaves
    ``[rho_min, rho_max]``.
    """
    p = np.asarray(p, dtype=float)
    rad = reach_radicand(geom, p)
    if np.any(rad < 0):
        leg = int(np.argwhere(rad < 0)[0][-1])
        raise OutOfReachError(f"leg {leg + 1} cannot reach {p.tolist()}", leg=leg, point=p)
    rho = joint_positions(geom, p)
    if enforce_limits and not np.all(within_stroke(geom, rho)):
        leg = int(np.argwhere(~within_stroke(geom, rho))[0][-1])
        raise JointLimitError(
            f"leg {leg + 1} outside stroke [{geom.rho_min}, {geom.rho_max}]", leg=leg, rho=rho
        )
    return rho


def _forward_batch(geom: MechanismGeometry, rho: np.ndarray):
    # sphere i: centre d_i * n_i, radius L
    L = geom.leg_length
    d = geom.base_offset + geom.tool_offset + rho
    d1, d2, d3 = d[..., 0], d[..., 1], d[..., 2]
    zeros = np.zeros_like(d1)
    c1 = np.stack([d1, zeros, zeros], axis=-1)
    c2 = np.stack([zeros, d2, zeros], axis=-1)
    c3 = np.stack([zeros, zeros, d3], axis=-1)

    ex = c2 - c1
    dist = np.linalg.norm(ex, axis=-1)
    v13 = c3 - c1
    with np.errstate(invalid="ignore", divide="ignore"):
        ex = ex / dist[..., None]
        i = np.sum(ex * v13, axis=-1)
        ey = v13 - i[..., None] * ex
        j = np.linalg.norm(ey, axis=-1)
        ey = ey / j[..., None]
        ez = np.cross(ex, ey)
        # equal radii simplify the classic trilateration formulas
        x = dist / 2.0
        y = (i * i + j * j) / (2.0 * j) - i * x / j
    degenerate = ~(dist > FK_TOL * L) | ~(j > FK_TOL * L)
    disc = L * L - x * x - y * y
    no_solution = disc < -FK_TOL * L * L
    h = np.sqrt(np.maximum(disc, 0.0))
    base = c1 + x[..., None] * ex + y[..., None] * ey
    p_plus = base + h[..., None] * ez
    p_minus = base - h[..., None] * ez
    return p_plus, p_minus, d, degenerate, no_solution


def _choose_root(geom, p_plus, p_minus, d):
    tol = -LIMIT_TOL * geom.leg_length
    ok_plus = np.all(p_plus - d >= tol, axis=-1)
    ok_minus = np.all(p_minus - d >= tol, axis=-1)
    centre = 0.5 * (geom.q1 + geom.q2)
    closer_plus = np.linalg.norm(p_plus - centre, axis=-1) <= np.linalg.norm(p_minus - centre, axis=-1)
    take_plus = np.where(ok_plus & ok_minus, closer_plus, ok_plus)
    return np.where(take_plus[..., None], p_plus, p_minus), ok_plus | ok_minus


def forward_kinematics(geom: MechanismGeometry, rho) -> np.ndarray:
    """Tool point for joint positions ``rho`` (shape ``(3,)`` or ``(..., 3)``).

    Intersects the three leg spheres and keeps the root whose links all
    point forward along their axes; if both roots qualify, the one nearer
    the prescribed cube centre wins.
    """
    rho = np.asarray(rho, dtype=float)
    p_plus, p_minus, d, degenerate, no_solution = _forward_batch(geom, rho)
    if np.any(degenerate):
        raise DegenerateError("sphere centres are coincident or collinear")
    if np.any(no_solution):
        raise NoSolutionError(f"leg spheres do not intersect for rho={rho.tolist()}")
    p, valid = _choose_root(geom, p_plus, p_minus, d)
    if not np.all(valid):
        raise NoSolutionError("no root in the working assembly mode")
    return p


def link_vectors(geom: MechanismGeometry, p) -> np.ndarray:
    """Rows ``C_i - B_i`` as an array of shape ``(..., 3, 3)``.

    Row ``i`` has the axial component ``eta_i`` on column ``i`` and the tool
    coordinates elsewhere; NaN rows mark legs out of reach.
    """
    p = np.asarray(p, dtype=float)
    eta = axial_link_components(geom, p)
    rows = np.repeat(p[..., None, :], 3, axis=-2).copy()
    for i in range(3):
        rows[..., i, i] = eta[..., i]
    return rows


def leg_postures(geom: MechanismGeometry, p) -> list[LegPosture]:
    """Joint state ``(rho, theta, beta)`` and link direction of each leg."""
    p = np.asarray(p, dtype=float)
    rho = inverse_kinematics(geom, p)
    links = link_vectors(geom, p) / geom.leg_length
    legs = []
    for i in range(3):
        a, b, c = cyclic(i)
        u = links[i]
        theta = np.arctan2(u[b], u[a])
        beta = np.arctan2(-u[c], np.hypot(u[a], u[b])) + 0.0  # drop -0.0
        legs.append(LegPosture(rho=float(rho[i]), theta=float(theta), beta=float(beta), link_dir=u))
    return legs


def jacobian_arrays(geom: MechanismGeometry, p):
    """Batch ``(A, eta, J_inv, serial)``; ``J_inv`` rows are NaN when serial."""
    A = link_vectors(geom, p)
    eta = np.stack([A[..., i, i] for i in range(3)], axis=-1)
    serial = np.any(np.abs(eta) < SERIAL_TOL * geom.leg_length, axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        J_inv = A / eta[..., :, None]
    J_inv = np.where(serial[..., None, None], np.nan, J_inv)
    return A, eta, J_inv, serial


def jacobians(geom: MechanismGeometry, p) -> JacobianSet:
    """Parallel/serial Jacobians and ``J^-1 = B^-1 A`` at a single point."""
    p = np.asarray(p, dtype=float)
    inverse_kinematics(geom, p)
    A, eta, J_inv, serial = jacobian_arrays(geom, p)
    return JacobianSet(A=A, B_diag=eta, J_inv=None if serial else J_inv)
