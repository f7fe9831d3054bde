"""JSON design documents and point-cloud files."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .model import JointLimitSolution, MechanismGeometry
from .synthesis import joint_limits


def design_document(geom: MechanismGeometry, psi_max: float, limits: JointLimitSolution | None = None) -> dict:
    if limits is None:
        limits = joint_limits(psi_max)
    return {
        "leg_length_mm": geom.leg_length,
        "tool_offset_mm": geom.tool_offset,
        "base_offset_mm": geom.base_offset,
        "rho_min_mm": geom.rho_min,
        "rho_max_mm": geom.rho_max,
        "q1_mm": geom.q1,
        "q2_mm": geom.q2,
        "psi_max": float(psi_max),
        "workspace_edge_mm": geom.workspace_edge,
        "joint_limits": {
            "theta_q1_deg": float(np.degrees(limits.theta_q1)),
            "beta_q1_deg": float(np.degrees(limits.beta_q1)),
            "theta_q2_deg": float(np.degrees(limits.theta_q2)),
            "beta_q2_deg": float(np.degrees(limits.beta_q2)),
        },
        "stroke_ratio": geom.stroke_ratio,
    }


def dumps_design(doc: dict) -> str:
    # json writes floats with repr(), the shortest exact round-trip form
    return json.dumps(doc, indent=2) + "\n"


def write_design(path, geom: MechanismGeometry, psi_max: float) -> dict:
    doc = design_document(geom, psi_max)
    Path(path).write_text(dumps_design(doc))
    return doc


def geometry_from_document(doc: dict) -> MechanismGeometry:
    try:
        return MechanismGeometry(
            leg_length=float(doc["leg_length_mm"]),
            tool_offset=float(doc["tool_offset_mm"]),
            base_offset=float(doc["base_offset_mm"]),
            rho_max=float(doc["rho_max_mm"]),
            q1=float(doc["q1_mm"]),
            q2=float(doc["q2_mm"]),
            rho_min=float(doc.get("rho_min_mm", 0.0)),
        )
    except KeyError as exc:
        raise ValueError(f"design document lacks {exc.args[0]!r}") from None


def read_design(path) -> tuple[MechanismGeometry, float]:
    """Load ``(geometry, psi_max)`` from a design document."""
    doc = json.loads(Path(path).read_text())
    return geometry_from_document(doc), float(doc["psi_max"])


def format_point_cloud(points) -> str:
    return "".join(" ".join(repr(float(v)) for v in p) + "\n" for p in np.asarray(points))


def read_point_cloud(path) -> np.ndarray:
    return np.loadtxt(path, ndmin=2)
