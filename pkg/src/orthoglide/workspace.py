"""Workspace membership, cube inclusion and cross-section field maps."""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .kinematics import joint_positions, reach_radicand, stroke_violation
from .kinetostatics import transmission_arrays
from .model import MechanismGeometry
from .singularity import det_a_normalized

FIELD_MARGIN = 0.10  # field maps extend the cube square by 10% of the edge per side
CSV_HEADER = "x_mm,y_mm,z_mm,psi1,psi2,psi3,kappa,detA_norm,rho1_mm,rho2_mm,rho3_mm,inside"
AXIS_NAMES = "xyz"


class Verdict(enum.Enum):
    INSIDE = "Inside"
    OUTSIDE_REACH = "OutsideReach"
    OUTSIDE_STROKE = "OutsideStroke"


def membership(geom: MechanismGeometry, p) -> np.ndarray:
    """Vectorised verdict codes: 0 inside, 1 out of reach, 2 out of stroke."""
    p = np.asarray(p, dtype=float)
    reach = np.all(reach_radicand(geom, p) >= 0, axis=-1)
    with np.errstate(invalid="ignore"):
        rho = joint_positions(geom, p)
        ok = np.all(stroke_violation(geom, rho) <= 1e-9 * geom.leg_length, axis=-1)
    return np.where(~reach, 1, np.where(ok, 0, 2))


_VERDICTS = (Verdict.INSIDE, Verdict.OUTSIDE_REACH, Verdict.OUTSIDE_STROKE)


def contains(geom: MechanismGeometry, p) -> Verdict:
    """Whether ``p`` is reachable within the actuator strokes."""
    return _VERDICTS[int(membership(geom, p))]


def cube_boundary_grid(anchor, edge: float, per_face: int = 9) -> np.ndarray:
    """Points on the faces, edges and corners of ``[anchor, anchor + edge]^3``."""
    anchor = np.asarray(anchor, dtype=float)
    g = np.linspace(0.0, edge, per_face)
    pts = []
    for axis in range(3):
        others = [d for d in range(3) if d != axis]
        u, v = np.meshgrid(g, g, indexing="ij")
        for side in (0.0, edge):
            face = np.zeros(u.shape + (3,))
            face[..., axis] = side
            face[..., others[0]] = u
            face[..., others[1]] = v
            pts.append(face.reshape(-1, 3))
    pts = np.unique(np.concatenate(pts), axis=0)
    return anchor + pts


class InclusionResult(NamedTuple):
    included: bool
    failure_point: Optional[np.ndarray]
    verdict: Verdict


def cube_inclusion(geom: MechanismGeometry, edge: float, anchor, per_face: int = 9) -> InclusionResult:
    """Check that the cube ``[anchor, anchor + edge]^3`` lies in the workspace.

    Only the boundary is probed (``per_face x per_face`` nodes per face).
    On failure the reported point is the worst one: any out-of-reach node
    first, otherwise the node with the largest stroke overrun.
    """
    if not edge > 0:
        raise ValueError("edge must be > 0")
    pts = cube_boundary_grid(anchor, edge, per_face)
    codes = membership(geom, pts)
    if np.all(codes == 0):
        return InclusionResult(True, None, Verdict.INSIDE)
    with np.errstate(invalid="ignore"):
        overrun = np.max(stroke_violation(geom, joint_positions(geom, pts)), axis=-1)
    overrun = np.where(codes == 1, np.inf, np.where(codes == 0, -np.inf, overrun))
    worst = int(np.argmax(overrun))
    return InclusionResult(False, pts[worst], _VERDICTS[codes[worst]])


@dataclass
class FieldMap:
    """Quantities sampled on a plane, rows in row-major order.

    Cells outside the workspace hold NaN in every quantity column.
    """

    points: np.ndarray
    psi: np.ndarray
    kappa: np.ndarray
    detA_normalized: np.ndarray
    rho: np.ndarray
    inside: np.ndarray
    shape: tuple

    def __len__(self):
        return len(self.points)

    def columns(self) -> np.ndarray:
        return np.column_stack(
            [self.points, self.psi, self.kappa, self.detA_normalized, self.rho, self.inside.astype(float)]
        )

    def to_csv(self, path_or_buf=None) -> Optional[str]:
        """Write the CSV table; returns the text when no target is given."""
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for row, inside in zip(self.columns()[:, :-1], self.inside):
            buf.write(",".join(format_float(v) for v in row) + f",{int(inside)}\n")
        text = buf.getvalue()
        if path_or_buf is None:
            return text
        if hasattr(path_or_buf, "write"):
            path_or_buf.write(text)
        else:
            with open(path_or_buf, "w", newline="") as fh:
                fh.write(text)
        return None


def format_float(v: float) -> str:
    if np.isnan(v):
        return "nan"
    return repr(float(v))


def plane_grid(geom: MechanismGeometry, axis: int, offset: float, grid_n: int) -> np.ndarray:
    """Row-major ``grid_n x grid_n`` lattice on the plane ``p[axis] = offset``.

    The lattice covers ``[q1, q2]`` widened by ``FIELD_MARGIN`` of the edge
    on each side; the slower index runs over the higher in-plane axis.
    """
    margin = FIELD_MARGIN * geom.workspace_edge
    g = np.linspace(geom.q1 - margin, geom.q2 + margin, grid_n)
    lo_axis, hi_axis = [d for d in range(3) if d != axis]
    slow, fast = np.meshgrid(g, g, indexing="ij")
    pts = np.empty((grid_n, grid_n, 3))
    pts[..., axis] = offset
    pts[..., hi_axis] = slow
    pts[..., lo_axis] = fast
    return pts.reshape(-1, 3)


def sample_field(geom: MechanismGeometry, pts) -> FieldMap:
    """Evaluate every map quantity at arbitrary points ``(n, 3)``."""
    pts = np.asarray(pts, dtype=float).reshape(-1, 3)
    inside = membership(geom, pts) == 0
    with np.errstate(invalid="ignore", divide="ignore"):
        psi, _, kappa, _, _, _ = transmission_arrays(geom, pts)
        det = det_a_normalized(geom, pts)
        rho = joint_positions(geom, pts)
    nan = np.nan
    return FieldMap(
        points=pts,
        psi=np.where(inside[:, None], psi, nan),
        kappa=np.where(inside, kappa, nan),
        detA_normalized=np.where(inside, det, nan),
        rho=np.where(inside[:, None], rho, nan),
        inside=inside,
        shape=(len(pts),),
    )


def field_map(geom: MechanismGeometry, axis, offset: float, grid_n: int = 50) -> FieldMap:
    """Transmission factors, ``kappa``, ``det A`` and ``rho`` over a cross-section.

    ``axis`` is 0/1/2 or ``"x"``/``"y"``/``"z"``.
    """
    if isinstance(axis, str):
        axis = AXIS_NAMES.index(axis.lower())
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    fm = sample_field(geom, plane_grid(geom, axis, offset, grid_n))
    fm.shape = (grid_n, grid_n)
    return fm


def in_cube(geom: MechanismGeometry, pts, tol: float = 1e-9) -> np.ndarray:
    """Mask of points inside the prescribed cube ``[q1, q2]^3``."""
    pts = np.asarray(pts, dtype=float)
    t = tol * geom.leg_length
    return np.all((pts >= geom.q1 - t) & (pts <= geom.q2 + t), axis=-1)
