"""Parallel and serial singularities: classification and locus sampling."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import EmptyLocusError
from .kinematics import inverse_kinematics, link_vectors
from .model import AXES, MechanismGeometry, cyclic

DET_TOL = 1e-10
REFINE_TOL = 1e-10  # locus points are refined to REFINE_TOL * L
TOUCH_SCREEN = 1e-2  # normalized |det A| below which a local minimum is refined
MIN_GRID = 8


class SingularityClass(enum.Enum):
    REGULAR = "Regular"
    PARALLEL = "Parallel"
    SERIAL = "Serial"
    BOTH = "Both"


@dataclass(frozen=True)
class SingularityReport:
    detA_normalized: float
    detB_normalized: float
    kind: SingularityClass

    @property
    def parallel(self) -> bool:
        return self.kind in (SingularityClass.PARALLEL, SingularityClass.BOTH)

    @property
    def serial(self) -> bool:
        return self.kind in (SingularityClass.SERIAL, SingularityClass.BOTH)


def det_a_normalized(geom: MechanismGeometry, p) -> np.ndarray:
    """``det(A) / L^3`` for point(s) ``p``, NaN where some leg is out of reach."""
    A = link_vectors(geom, p)
    det = (
        A[..., 0, 0] * (A[..., 1, 1] * A[..., 2, 2] - A[..., 1, 2] * A[..., 2, 1])
        - A[..., 0, 1] * (A[..., 1, 0] * A[..., 2, 2] - A[..., 1, 2] * A[..., 2, 0])
        + A[..., 0, 2] * (A[..., 1, 0] * A[..., 2, 1] - A[..., 1, 1] * A[..., 2, 0])
    )
    return det / geom.leg_length**3


def classify(geom: MechanismGeometry, p) -> SingularityReport:
    """Classify a reachable tool point; stroke limits are ignored."""
    p = np.asarray(p, dtype=float)
    inverse_kinematics(geom, p)
    A = link_vectors(geom, p)
    det_a = float(det_a_normalized(geom, p))
    det_b = float(A[0, 0] * A[1, 1] * A[2, 2] / geom.leg_length**3)
    par, ser = abs(det_a) < DET_TOL, abs(det_b) < DET_TOL
    kind = {
        (False, False): SingularityClass.REGULAR,
        (True, False): SingularityClass.PARALLEL,
        (False, True): SingularityClass.SERIAL,
        (True, True): SingularityClass.BOTH,
    }[(par, ser)]
    return SingularityReport(det_a, det_b, kind)


def _refine_crossings(geom, f, start, axis, step):
    # f holds det values along one grid line starting at `start`
    L = geom.leg_length
    found = []

    def along(s):
        q = start.copy()
        q[axis] += s
        return q

    def g(s):
        return float(det_a_normalized(geom, along(s)))

    n = len(f)
    for k in range(n - 1):
        a, b = f[k], f[k + 1]
        if not (np.isfinite(a) and np.isfinite(b)):
            continue
        if a == 0.0:
            found.append(along(k * step))
        elif a * b < 0:
            s = brentq(g, k * step, (k + 1) * step, xtol=REFINE_TOL * L, rtol=4 * np.finfo(float).eps)
            found.append(along(s))
    # tangential zeros: det A touches zero without changing sign
    for k in range(1, n - 1):
        a, b, c = f[k - 1], f[k], f[k + 1]
        if not (np.isfinite(a) and np.isfinite(b) and np.isfinite(c)):
            continue
        if a * b <= 0 or b * c <= 0:
            continue
        if abs(b) > TOUCH_SCREEN or abs(b) > abs(a) or abs(b) > abs(c):
            continue
        res = minimize_scalar(
            lambda s: abs(g(s)),
            bounds=((k - 1) * step, (k + 1) * step),
            method="bounded",
            options={"xatol": REFINE_TOL * L},
        )
        if res.fun < DET_TOL:
            found.append(along(res.x))
    return found


def parallel_locus_sample(geom: MechanismGeometry, bounding_box, grid_n: int = 24) -> np.ndarray:
    """Points of the parallel singularity locus ``det A = 0`` inside a box.

    ``det A`` is evaluated on a ``grid_n**3`` lattice (stroke limits
    ignored).  Sign changes between neighbours along each lattice line are
    refined by Brent's method; local minima where ``det A`` touches zero
    without changing sign (the all-links-parallel sphere) are refined by
    bounded minimisation of ``|det A|``.  The result is de-duplicated and
    sorted lexicographically, shape ``(k, 3)``.
    """
    if grid_n < MIN_GRID:
        raise ValueError(f"grid_n must be >= {MIN_GRID}")
    lo, hi = (np.asarray(v, dtype=float) for v in bounding_box)
    if lo.shape != (3,) or hi.shape != (3,) or np.any(hi <= lo):
        raise ValueError("bounding_box must be ((x0, y0, z0), (x1, y1, z1)) with x1 > x0 ...")
    axes = [np.linspace(lo[d], hi[d], grid_n) for d in range(3)]
    steps = (hi - lo) / (grid_n - 1)
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    det = det_a_normalized(geom, grid)

    points = []
    for axis in range(3):
        d_line = np.moveaxis(det, axis, -1)
        g_line = np.moveaxis(grid, axis, -2)
        for idx in np.ndindex(d_line.shape[:-1]):
            f = d_line[idx]
            if not np.any(np.isfinite(f)):
                continue
            points.extend(_refine_crossings(geom, f, g_line[idx][0].copy(), axis, steps[axis]))

    if not points:
        raise EmptyLocusError("no parallel singularity in the sampled box")
    pts = np.array(points)
    # merge duplicates found along different lattice directions
    key = np.round(pts / (1e-7 * geom.leg_length)).astype(np.int64)
    _, first = np.unique(key, axis=0, return_index=True)
    pts = pts[np.sort(first)]
    order = np.lexsort((pts[:, 2], pts[:, 1], pts[:, 0]))
    return pts[order]


@dataclass(frozen=True)
class SerialLocus:
    """Serial singular set of one leg.

    The link is perpendicular to axis ``leg``: the tool point lies in the
    plane ``p[leg] = offset(rho)`` orthogonal to ``normal`` and on the rim
    ``p_j^2 + p_k^2 = radius^2`` of the reach cylinder.
    """

    leg: int
    normal: np.ndarray
    radius: float
    offset_at_zero_stroke: float

    def offset(self, rho: float) -> float:
        return self.offset_at_zero_stroke + rho

    def contains(self, p, tol: float = 1e-10) -> bool:
        p = np.asarray(p, dtype=float)
        _, j, k = cyclic(self.leg)
        return abs(p[j] ** 2 + p[k] ** 2 - self.radius**2) <= tol * self.radius**2


def serial_locus_planes(geom: MechanismGeometry) -> list[SerialLocus]:
    return [
        SerialLocus(
            leg=i,
            normal=AXES[i].copy(),
            radius=geom.leg_length,
            offset_at_zero_stroke=geom.base_offset + geom.tool_offset,
        )
        for i in range(3)
    ]
