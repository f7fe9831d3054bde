"""Design synthesis: from cube size and transmission bound to geometry.

Along the cube diagonal ``(c, c, c)`` every transmission factor depends on
the single slope ``t = c / sqrt(L^2 - 2 c^2)``:
``psi_1 = 1/|1 + 2t|`` along the diagonal and ``psi_2 = psi_3 = 1/|1 - t|``
across it.  The corners Q1 (``t < 0``) and Q2 (``t > 0``) are where the
bounds ``1/psi_max <= psi <= psi_max`` first bind; the corner coordinate is
``c = L * tau(t)`` with ``tau(t) = t / sqrt(1 + 2 t^2)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import BoundViolationError, DegenerateRequirementError, UnsupportedRangeError
from .kinetostatics import psi_from_slope, transmission_arrays
from .model import DesignRequirements, JointLimitSolution, MechanismGeometry

PSI_MAX_CAP = 4.0
LOW_RESOLUTION_GRID = 5
BOUND_TOL = 1e-6
CROSS_CHECK_TOL = 1e-8

# Angles (tangent = -t) where the diagonal factor meets a transverse factor
# or its reciprocal; F1_AT_S holds |2 tan(s) - 1| or its reciprocal there.
S1 = -np.arctan((1.0 + np.sqrt(17.0)) / 4.0)
S2 = -np.arctan(0.5)
S3 = 0.0
S4 = np.arctan((-1.0 + np.sqrt(17.0)) / 4.0)
F1_AT_S = {
    "s1": (-3.0 + np.sqrt(17.0)) / 4.0,
    "s2": 2.0,
    "s3": 1.0,
    "s4": (3.0 + np.sqrt(17.0)) / 4.0,
}
# psi_max where the Q2 limit switches from the diagonal to the transverse factor
Q2_BRANCH_SWITCH = F1_AT_S["s2"]


def corner_coordinate_ratio(t):
    """``tau(t) = c / L`` for a diagonal point of slope ``t``."""
    t = np.asarray(t, dtype=float)
    return t / np.sqrt(1.0 + 2.0 * t * t)


def _check_psi_max(psi_max: float):
    if not np.isfinite(psi_max):
        raise UnsupportedRangeError(f"psi_max must be finite, got {psi_max}")
    if psi_max <= 1.0:
        raise DegenerateRequirementError(
            f"psi_max={psi_max} leaves only the isotropic point; need psi_max > 1"
        )
    if psi_max > PSI_MAX_CAP:
        raise UnsupportedRangeError(f"psi_max={psi_max} exceeds the supported cap {PSI_MAX_CAP}")


def q2_branch_angles(psi_max: float, branch: str):
    """Closed-form ``(theta_q2, beta_q2)`` of one Q2 branch.

    ``branch="diagonal"`` is the limit set by ``psi_1 >= 1/psi_max``
    (active for ``psi_max <= 2``), ``branch="transverse"`` the one set by
    ``psi_2 <= psi_max``.
    """
    m = psi_max
    if branch == "diagonal":
        theta = -np.arctan((m - 1.0) / 2.0)
        beta = np.arctan((m - 1.0) / np.sqrt(m * m - 2.0 * m + 5.0))
    elif branch == "transverse":
        theta = -np.arctan((m - 1.0) / m)
        beta = np.arctan((m - 1.0) / np.sqrt(2.0 * m * m - 2.0 * m + 1.0))
    else:
        raise ValueError(f"unknown branch {branch!r}")
    return float(theta), float(beta)


def _feasible(t, psi_max):
    psi1, psi2 = psi_from_slope(t)
    lo = 1.0 / psi_max
    return lo <= psi1 <= psi_max and lo <= psi2 <= psi_max


def _bisect_limit(psi_max, inside, outside, tol=1e-15, max_iter=200):
    # feasible at `inside`, infeasible at `outside`
    if not _feasible(inside, psi_max) or _feasible(outside, psi_max):
        raise ValueError("bracket does not straddle the feasibility boundary")
    for _ in range(max_iter):
        mid = 0.5 * (inside + outside)
        if _feasible(mid, psi_max):
            inside = mid
        else:
            outside = mid
        if abs(outside - inside) < tol:
            break
    return inside


def joint_limits_bisection(psi_max: float) -> tuple[float, float]:
    """Diagonal slopes ``(t_q1, t_q2)`` found by bisection on the bounds.

    Independent of the closed forms: only the diagonal transmission
    factors and the bound inequalities are used.  The Q1 bracket ends at
    the singular slope ``tan(S2) = -1/2``, the Q2 bracket at ``t = 1``.
    """
    _check_psi_max(psi_max)
    t_q1 = _bisect_limit(psi_max, inside=S3, outside=np.tan(S2))
    t_q2 = _bisect_limit(psi_max, inside=S3, outside=1.0)
    return t_q1, t_q2


def joint_limits(psi_max: float, cross_check: bool = True) -> JointLimitSolution:
    """Closed-form joint limits at Q1 and Q2 for a transmission bound."""
    _check_psi_max(psi_max)
    m = psi_max
    t_q1 = -(m - 1.0) / (2.0 * m)
    branch = "diagonal" if m <= Q2_BRANCH_SWITCH else "transverse"
    t_q2 = (m - 1.0) / 2.0 if branch == "diagonal" else (m - 1.0) / m

    theta_q1 = np.arctan((m - 1.0) / (2.0 * m))
    beta_q1 = -np.arctan((m - 1.0) / np.sqrt(5.0 * m * m - 2.0 * m + 1.0))
    theta_q2, beta_q2 = q2_branch_angles(m, branch)

    if cross_check:
        b1, b2 = joint_limits_bisection(m)
        if abs(b1 - t_q1) > CROSS_CHECK_TOL or abs(b2 - t_q2) > CROSS_CHECK_TOL:
            raise RuntimeError(
                f"closed-form limits ({t_q1}, {t_q2}) disagree with bisection ({b1}, {b2})"
            )

    return JointLimitSolution(
        psi_max=float(m),
        t_q1=float(t_q1),
        t_q2=float(t_q2),
        theta_q1=float(theta_q1),
        beta_q1=float(beta_q1),
        theta_q2=theta_q2,
        beta_q2=beta_q2,
    )


def synthesize(req: DesignRequirements) -> MechanismGeometry:
    """Full geometry for a prescribed cube edge, ``psi_max`` and tool offset."""
    limits = joint_limits(req.psi_max)
    tau1 = corner_coordinate_ratio(limits.t_q1)
    tau2 = corner_coordinate_ratio(limits.t_q2)
    L = req.workspace_edge / (tau2 - tau1)
    q1, q2 = L * tau1, L * tau2
    e = req.tool_offset
    a = q1 - e - L
    # leg 2 at Q1' = (0, q1, 0) sits at rho = 0; every leg at Q2 at rho_max
    rho_max = q2 - a - np.sqrt(L * L - 2.0 * q2 * q2) - e
    return MechanismGeometry(
        leg_length=float(L),
        tool_offset=float(e),
        base_offset=float(a),
        rho_max=float(rho_max),
        q1=float(q1),
        q2=float(q2),
        rho_min=0.0,
    )


def cube_grid(geom: MechanismGeometry, grid_n: int) -> np.ndarray:
    """``grid_n**3`` points over ``[q1, q2]^3``, shape ``(n, n, n, 3)``."""
    g = np.linspace(geom.q1, geom.q2, grid_n)
    return np.stack(np.meshgrid(g, g, g, indexing="ij"), axis=-1)


@dataclass
class ExtremalityReport:
    psi_max: float
    grid_n: int
    bounds_ok: bool
    extrema_at_corners: bool
    low_resolution: bool
    psi_lowest: float
    psi_highest: float
    argmin_point: np.ndarray
    argmax_point: np.ndarray
    corner_psi: dict = field(default_factory=dict)
    worst_point: Optional[np.ndarray] = None
    worst_psi: Optional[np.ndarray] = None

    @property
    def passed(self) -> bool:
        return self.bounds_ok and self.extrema_at_corners


def verify_extremality(geom: MechanismGeometry, psi_max: float, grid_n: int = 21) -> ExtremalityReport:
    """Grid check that the bounds hold over the cube and bind at Q1/Q2.

    Samples ``grid_n**3`` points of ``[q1, q2]^3`` (stroke limits ignored).
    Raises :class:`BoundViolationError` carrying the report when some
    factor leaves ``[1/psi_max - 1e-6, psi_max + 1e-6]``.  Grids coarser
    than ``LOW_RESOLUTION_GRID`` are flagged ``low_resolution``.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    pts = cube_grid(geom, grid_n).reshape(-1, 3)
    psi = transmission_arrays(geom, pts)[0]

    lo, hi = 1.0 / psi_max - BOUND_TOL, psi_max + BOUND_TOL
    # out of reach or singular cells count as violations
    excess = np.maximum(lo - psi[:, 0], psi[:, -1] - hi)
    excess = np.where(np.isfinite(psi).all(axis=1), excess, np.inf)
    bounds_ok = bool(np.all(excess <= 0))

    finite = np.isfinite(psi).all(axis=1)
    psi_low = np.where(finite, psi[:, 0], np.inf)
    psi_high = np.where(finite, psi[:, -1], -np.inf)
    i_min, i_max = int(np.argmin(psi_low)), int(np.argmax(psi_high))

    corner_idx = {"Q1": 0, "Q2": len(pts) - 1}
    corner_psi = {k: psi[i] for k, i in corner_idx.items()}
    corner_low = min(corner_psi["Q1"][0], corner_psi["Q2"][0])
    corner_high = max(corner_psi["Q1"][-1], corner_psi["Q2"][-1])
    tie = 1e-9 * psi_max
    extrema_at_corners = bool(psi_low[i_min] >= corner_low - tie and psi_high[i_max] <= corner_high + tie)

    low_res = grid_n < LOW_RESOLUTION_GRID
    if low_res:
        warnings.warn(f"grid_n={grid_n} only probes a few cells (LowResolution)", stacklevel=2)

    report = ExtremalityReport(
        psi_max=float(psi_max),
        grid_n=grid_n,
        bounds_ok=bounds_ok,
        extrema_at_corners=extrema_at_corners,
        low_resolution=low_res,
        psi_lowest=float(psi_low[i_min]),
        psi_highest=float(psi_high[i_max]),
        argmin_point=pts[i_min],
        argmax_point=pts[i_max],
        corner_psi=corner_psi,
    )
    if not bounds_ok:
        worst = int(np.argmax(excess))
        report.worst_point = pts[worst]
        report.worst_psi = psi[worst]
        raise BoundViolationError(
            f"psi={psi[worst].tolist()} outside [{1 / psi_max}, {psi_max}] at {pts[worst].tolist()}",
            report=report,
        )
    return report
