"""Size a three-axis Orthoglide for a 200 mm cube with psi in [1/2, 2]."""

import numpy as np

from orthoglide import DesignRequirements, joint_limits, synthesize, transmission

# The design starts from two numbers: the cube edge and the allowed spread
# of the velocity transmission factors.
req = DesignRequirements(workspace_edge=200.0, psi_max=2.0)

# Joint limits first: the leg angles at which the bound is reached along
# the cube diagonal, on the side of Q1 (toward the base) and of Q2.
limits = joint_limits(req.psi_max)
for name in ("theta_q1", "beta_q1", "theta_q2", "beta_q2"):
    print(f"{name:9s} {np.degrees(getattr(limits, name)):8.3f} deg")

geom = synthesize(req)
print(f"\nleg length   L     = {geom.leg_length:8.3f} mm")
print(f"base offset  a     = {geom.base_offset:8.3f} mm")
print(f"stroke       rho   = {geom.stroke:8.3f} mm")
print(f"cube corners q1/q2 = {geom.q1:.3f} / {geom.q2:.3f} mm")
print(f"stroke ratio       = {geom.stroke_ratio:.3f}")

# The bounds bind at the two diagonal corners and nowhere else.
for label, p in (("origin", np.zeros(3)), ("Q1", geom.Q1), ("Q2", geom.Q2)):
    rep = transmission(geom, p)
    print(f"{label:6s} psi = {np.round(rep.psi, 6)}  kappa = {rep.kappa:.4f}")

# Leg length and stroke scale linearly with the cube; the tool offset only
# moves the base.
for edge, e in ((100.0, 0.0), (200.0, 10.0)):
    g = synthesize(DesignRequirements(edge, 2.0, e))
    print(f"edge {edge:5.0f}, e {e:4.1f}: L = {g.leg_length:.3f}, stroke = {g.stroke:.3f}, a = {g.base_offset:.3f}")
