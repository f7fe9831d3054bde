"""Transmission factors over a cross-section of the workspace."""

import numpy as np

from orthoglide import DesignRequirements, field_map, synthesize, verify_extremality
from orthoglide.workspace import in_cube

geom = synthesize(DesignRequirements(200.0, 2.0))

# The plane z = q1 holds the Q1 corner, where the largest factor reaches 2.
fm = field_map(geom, "z", geom.q1, grid_n=50)
cube = in_cube(geom, fm.points)
print(f"{len(fm)} cells, {fm.inside.sum()} reachable, {cube.sum()} in the cube")
print(f"psi range inside the cube: [{np.min(fm.psi[cube]):.4f}, {np.max(fm.psi[cube]):.4f}]")

# A coarse text picture of the largest factor; '.' marks unreachable cells.
psi_max = fm.psi[:, -1].reshape(fm.shape)
shades = " -=+*#"
for row in psi_max[::-5]:
    print("".join("." if np.isnan(v) else shades[min(int((v - 1.0) / 0.25), 5)] for v in row[::2]))

# The full volume check: a 41^3 grid over the cube.
rep = verify_extremality(geom, 2.0, grid_n=41)
print(f"\n41^3 grid: passed={rep.passed}, psi in [{rep.psi_lowest:.6f}, {rep.psi_highest:.6f}]")
print(f"largest factor at {np.round(rep.argmax_point, 3)}, smallest at {np.round(rep.argmin_point, 3)}")

# The CSV export is what plotting tools consume.
print("\n" + "\n".join(fm.to_csv().splitlines()[:3]))
