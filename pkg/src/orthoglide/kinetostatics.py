"""Manipulability ellipsoid, transmission factors and isotropy measures."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .eigen import dot3, eigh_sym3
from .errors import DomainError, SerialSingularError
from .kinematics import inverse_kinematics, jacobian_arrays, link_vectors
from .model import MechanismGeometry, TransmissionReport

PARALLEL_TOL = 1e-10  # semi-axis xi below this means an unbounded psi


def transmission_arrays(geom: MechanismGeometry, p):
    """Batch transmission factors.

    Returns ``(psi, axes, kappa, xi, parallel, serial)`` with ``psi``
    ascending along the last axis.  Serial-singular and out-of-reach
    points carry NaN.
    """
    _, eta, J_inv, serial = jacobian_arrays(geom, p)
    undefined = serial | np.any(np.isnan(eta), axis=-1)
    # (J^-1)^T J^-1 == (J J^T)^-1, written element-wise
    cols = [J_inv[..., :, c] for c in range(3)]
    N = np.stack([np.stack([dot3(cols[r], cols[c]) for c in range(3)], axis=-1) for r in range(3)], axis=-2)
    N = np.where(np.isnan(N), 0.0, N)
    lam, vecs = eigh_sym3(N)
    # descending eigenvalues <-> ascending psi
    lam = lam[..., ::-1]
    vecs = vecs[..., ::-1]
    xi = np.sqrt(np.maximum(lam, 0.0))
    xi = _refine_small_axes(J_inv, xi)
    parallel = xi[..., -1] < PARALLEL_TOL
    with np.errstate(divide="ignore"):
        psi = np.where(xi < PARALLEL_TOL, np.inf, 1.0 / np.where(xi > 0, xi, 1.0))
        kappa = np.where(parallel, np.inf, xi[..., 0] / np.where(parallel, 1.0, xi[..., -1]))
    psi = np.where(undefined[..., None], np.nan, psi)
    xi = np.where(undefined[..., None], np.nan, xi)
    kappa = np.where(undefined, np.nan, kappa)
    return psi, vecs, kappa, xi, parallel & ~undefined, serial


SMALL_AXIS_RATIO = 1e-4  # below xi_2/xi_1 the eigenvalue route loses digits


def _refine_small_axes(M, xi):
    # Semi-axes from eigenvalues of M^T M keep only sqrt(eps) of a tiny xi.
    # The determinant gives xi_2 xi_3 and the cofactor norm gives
    # xi_1^2 (xi_2^2 + xi_3^2) + (xi_2 xi_3)^2, both from entries of M.
    x1, x2, x3 = xi[..., 0], xi[..., 1], xi[..., 2]
    ok = x1 > 0
    x1s = np.where(ok, x1, 1.0)
    prod = np.abs(_det3(M)) / x1s
    cof = 0.0
    for r0, r1 in ((1, 2), (2, 0), (0, 1)):
        for c0, c1 in ((1, 2), (2, 0), (0, 1)):
            minor = M[..., r0, c0] * M[..., r1, c1] - M[..., r0, c1] * M[..., r1, c0]
            cof = cof + minor * minor
    ssq = np.maximum((cof - prod * prod) / (x1s * x1s), 0.0)
    disc = np.sqrt(np.maximum(ssq * ssq - 4.0 * prod * prod, 0.0))
    big = np.sqrt(0.5 * (ssq + disc))
    with np.errstate(invalid="ignore", divide="ignore"):
        small_from_big = np.where(big > 0, prod / np.where(big > 0, big, 1.0), 0.0)
        small_from_x2 = np.where(x2 > 0, np.abs(_det3(M)) / (x1s * np.where(x2 > 0, x2, 1.0)), x3)
    tiny = ok & (x2 < SMALL_AXIS_RATIO * x1)
    new2 = np.where(tiny, np.minimum(big, x1), x2)
    new3 = np.where(tiny, np.minimum(small_from_big, new2), np.where(ok, np.minimum(small_from_x2, x2), x3))
    return np.stack([x1, new2, new3], axis=-1)


def _det3(M):
    return (
        M[..., 0, 0] * (M[..., 1, 1] * M[..., 2, 2] - M[..., 1, 2] * M[..., 2, 1])
        - M[..., 0, 1] * (M[..., 1, 0] * M[..., 2, 2] - M[..., 1, 2] * M[..., 2, 0])
        + M[..., 0, 2] * (M[..., 1, 0] * M[..., 2, 1] - M[..., 1, 1] * M[..., 2, 0])
    )


def transmission(geom: MechanismGeometry, p) -> TransmissionReport:
    """Velocity transmission factors and ellipsoid axes at one tool point."""
    p = np.asarray(p, dtype=float)
    inverse_kinematics(geom, p)
    psi, axes, kappa, xi, parallel, serial = transmission_arrays(geom, p)
    if serial:
        raise SerialSingularError(f"J^-1 undefined at {p.tolist()}")
    return TransmissionReport(psi=psi, axes=axes, kappa=float(kappa), xi=xi, parallel_singular=bool(parallel))


def condition_number(geom: MechanismGeometry, p) -> float:
    """Ratio of extreme singular values of ``J^-1``; ``inf`` at a parallel singularity."""
    return transmission(geom, p).kappa


class DiagonalTransmission(NamedTuple):
    psi1: float
    psi2: float
    psi3: float

    @property
    def parallel_singular(self) -> bool:
        return bool(np.isinf(self).any())


def diagonal_slope(geom: MechanismGeometry, c):
    """``t = c / sqrt(L^2 - 2 c^2)`` for the diagonal point ``(c, c, c)``."""
    c = np.asarray(c, dtype=float)
    rad = geom.leg_length**2 - 2.0 * c * c
    if np.any(rad <= 0):
        raise DomainError(f"|c| must be below L/sqrt(2) = {geom.leg_length / np.sqrt(2)}")
    return c / np.sqrt(rad)


def psi_from_slope(t):
    """Closed-form diagonal factors ``(1/|1+2t|, 1/|1-t|)``; ``inf`` when unbounded."""
    t = np.asarray(t, dtype=float)
    xi1, xi2 = np.abs(1.0 + 2.0 * t), np.abs(1.0 - t)
    with np.errstate(divide="ignore"):
        psi1 = np.where(xi1 < PARALLEL_TOL, np.inf, 1.0 / xi1)
        psi2 = np.where(xi2 < PARALLEL_TOL, np.inf, 1.0 / xi2)
    return psi1, psi2


def diagonal_transmission(geom: MechanismGeometry, c: float) -> DiagonalTransmission:
    """Transmission factors on the cube diagonal ``(c, c, c)``.

    ``psi1`` is along the diagonal itself, ``psi2 == psi3`` across it.
    """
    psi1, psi2 = psi_from_slope(diagonal_slope(geom, c))
    return DiagonalTransmission(float(psi1), float(psi2), float(psi2))


def isotropy_residual(geom: MechanismGeometry, p):
    """Deviation from the unit-isotropic configuration.

    Returns ``(length, orthogonality)``: ``length[i] = |‖c_i - b_i‖/eta_i - 1|``
    and ``orthogonality`` holds the absolute cosines between the link pairs
    (1, 2), (2, 3), (3, 1).
    """
    p = np.asarray(p, dtype=float)
    inverse_kinematics(geom, p)
    A = link_vectors(geom, p)
    norms = np.linalg.norm(A, axis=-1)
    eta = np.diag(A)
    with np.errstate(divide="ignore"):
        length = np.abs(norms / eta - 1.0)
    ortho = np.array(
        [abs(A[i] @ A[(i + 1) % 3]) / (norms[i] * norms[(i + 1) % 3]) for i in range(3)]
    )
    return length, ortho
