"""Domain types and the frame convention used throughout the package.

Frame
-----
The origin ``O`` sits at the intersection of the three actuated axes.
Leg ``i`` slides along ``n_i``, with ``n_1, n_2, n_3 = +x, +y, +z``.
Base point ``A_i`` lies at signed coordinate ``a`` on axis ``i``, the
carriage ``B_i`` at ``a + rho_i`` and the parallelogram tip
``C_i = P - e * n_i`` where ``P`` is the tool centre point and ``e`` the
tool offset.  The prescribed cube spans ``[q1, q2]^3`` with
``q1 < 0 < q2``.

Angles of leg ``i`` are read from the unit link direction
``u = (C_i - B_i) / L`` taken in cyclic components
``(u[i], u[i+1], u[i+2]) = (cos(theta) cos(beta), sin(theta) cos(beta),
-sin(beta))``.

Lengths are millimetres and angles radians everywhere except in the CLI
output, which uses degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

AXES = np.eye(3)
UNIT_TOL = 1e-12
INVARIANT_RTOL = 1e-9


def cyclic(i: int) -> tuple[int, int, int]:
    """Return the axis indices ``(i, i+1, i+2)`` modulo 3."""
    return i, (i + 1) % 3, (i + 2) % 3


@dataclass(frozen=True)
class Frame:
    origin: tuple = (0.0, 0.0, 0.0)
    leg_axes: tuple = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    isotropic_point: tuple = (0.0, 0.0, 0.0)
    description: str = (
        "origin at the intersection of the actuated axes; n_i = e_i; "
        "A_i = a*n_i, B_i = (a + rho_i)*n_i, C_i = P - e*n_i; "
        "prescribed cube [q1, q2]^3 with q1 < 0 < q2"
    )

    def axis(self, leg: int) -> np.ndarray:
        return np.array(self.leg_axes[leg])

    def diagonal_point(self, c: float) -> np.ndarray:
        return np.array([c, c, c], dtype=float)


def canonical_frame() -> Frame:
    """The single frame and sign convention used by every module."""
    return Frame()


@dataclass(frozen=True)
class DesignRequirements:
    """Inputs of the synthesis: cube edge, transmission bound, tool offset."""

    workspace_edge: float
    psi_max: float
    tool_offset: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.workspace_edge) or self.workspace_edge <= 0:
            raise ValueError(f"workspace_edge must be > 0, got {self.workspace_edge}")
        if not np.isfinite(self.psi_max) or self.psi_max <= 0:
            raise ValueError(f"psi_max must be a positive number, got {self.psi_max}")
        if not np.isfinite(self.tool_offset) or self.tool_offset < 0:
            raise ValueError(f"tool_offset must be >= 0, got {self.tool_offset}")

    @property
    def psi_min(self) -> float:
        return 1.0 / self.psi_max


@dataclass(frozen=True)
class MechanismGeometry:
    """Fixed dimensions of one Orthoglide instance.

    Only the basic sanity conditions are enforced on construction so that
    hand-edited designs can still be analysed; :meth:`check` reports the
    relations a synthesized geometry must satisfy.
    """

    leg_length: float
    tool_offset: float
    base_offset: float
    rho_max: float
    q1: float
    q2: float
    rho_min: float = 0.0

    def __post_init__(self):
        if not self.leg_length > 0:
            raise ValueError(f"leg_length must be > 0, got {self.leg_length}")
        if not self.rho_max > self.rho_min:
            raise ValueError("rho_max must exceed rho_min")
        if not self.q2 > self.q1:
            raise ValueError("q2 must exceed q1")

    @property
    def workspace_edge(self) -> float:
        return self.q2 - self.q1

    @property
    def stroke(self) -> float:
        return self.rho_max - self.rho_min

    @property
    def stroke_ratio(self) -> float:
        """Cube edge over actuator stroke."""
        return self.workspace_edge / self.stroke

    @property
    def Q1(self) -> np.ndarray:
        return np.full(3, self.q1)

    @property
    def Q2(self) -> np.ndarray:
        return np.full(3, self.q2)

    def check(self, workspace_edge: Optional[float] = None) -> list[str]:
        """Return the list of violated synthesis invariants (empty if none)."""
        problems = []
        L = self.leg_length

        def close(x, y):
            return abs(x - y) <= INVARIANT_RTOL * max(abs(x), abs(y), L)

        if self.rho_min != 0.0:
            problems.append("rho_min must be 0")
        if not close(self.base_offset, self.q1 - self.tool_offset - L):
            problems.append("base_offset != q1 - tool_offset - leg_length")
        if workspace_edge is not None and not close(self.workspace_edge, workspace_edge):
            problems.append("q2 - q1 != workspace_edge")
        if not self.q1 < 0 < self.q2:
            problems.append("q1 < 0 < q2 violated")
        for name, q in (("Q1", self.q1), ("Q2", self.q2)):
            if not np.sqrt(3.0) * abs(q) < L:
                problems.append(f"{name} not strictly inside the sphere |p| = L")
        return problems

    def scaled(self, k: float) -> "MechanismGeometry":
        return MechanismGeometry(
            leg_length=k * self.leg_length,
            tool_offset=k * self.tool_offset,
            base_offset=k * self.base_offset,
            rho_max=k * self.rho_max,
            q1=k * self.q1,
            q2=k * self.q2,
            rho_min=k * self.rho_min,
        )


@dataclass(frozen=True)
class LegPosture:
    rho: float
    theta: float
    beta: float
    link_dir: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class JacobianSet:
    """Parallel Jacobian ``A``, serial diagonal ``eta`` and ``J^-1``.

    ``J_inv`` is ``None`` when some ``|eta_i|`` falls below the serial
    singularity tolerance.
    """

    A: np.ndarray
    B_diag: np.ndarray
    J_inv: Optional[np.ndarray]

    @property
    def B(self) -> np.ndarray:
        return np.diag(self.B_diag)

    @property
    def serial_singular(self) -> bool:
        return self.J_inv is None


@dataclass(frozen=True)
class TransmissionReport:
    """Velocity transmission factors at one pose.

    ``psi`` is ascending and ``axes[:, k]`` is the principal direction
    carrying ``psi[k]``.  Unbounded factors (parallel singularity) are
    ``inf`` and set ``parallel_singular``.
    """

    psi: np.ndarray
    axes: np.ndarray
    kappa: float
    xi: np.ndarray
    parallel_singular: bool = False

    @property
    def force_factors(self) -> np.ndarray:
        # static duality: force factors along the same axes are 1/psi
        with np.errstate(divide="ignore"):
            return 1.0 / self.psi


@dataclass(frozen=True)
class JointLimitSolution:
    """Diagonal joint limits for one transmission bound.

    ``t_q1`` and ``t_q2`` are the slopes ``c / sqrt(L^2 - 2 c^2)`` of the
    cube corners on the diagonal.  The angles are signed with positive
    ``theta`` toward Q1, i.e. opposite to :func:`~orthoglide.kinematics.leg_postures`;
    their magnitudes are convention free.
    """

    psi_max: float
    t_q1: float
    t_q2: float
    theta_q1: float
    beta_q1: float
    theta_q2: float
    beta_q2: float
