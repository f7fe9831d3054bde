"""Where the mechanism degenerates, and how far that is from the cube."""

import numpy as np

from orthoglide import (
    DesignRequirements,
    EmptyLocusError,
    classify,
    parallel_locus_sample,
    serial_locus_planes,
    synthesize,
)
from orthoglide.singularity import det_a_normalized
from orthoglide.synthesis import cube_grid

geom = synthesize(DesignRequirements(200.0, 2.0))
L = geom.leg_length

# The isotropic point is as regular as it gets: det(A)/L^3 = 1.
print(classify(geom, [0, 0, 0]))

# When every link lies along the tool position vector the platform can move
# with locked actuators: the sphere |p| = L.
print(classify(geom, L / np.sqrt(3) * np.ones(3)).kind)

# On the diagonal below the origin the links become coplanar at c = -L/sqrt(6).
c = -L / np.sqrt(6)
print(classify(geom, [c, c, c]).kind)

# Sample the locus between Q2 and just past the sphere.
hi = 1.1 * L / np.sqrt(3)
pts = parallel_locus_sample(geom, (geom.Q2, np.full(3, hi)), grid_n=16)
r = np.linalg.norm(pts, axis=1)
print(f"{len(pts)} locus points, |p|/L in [{r.min() / L:.6f}, {r.max() / L:.6f}]")

# Nothing inside the prescribed cube.
try:
    parallel_locus_sample(geom, (geom.Q1 + 1, geom.Q2 - 1), grid_n=12)
except EmptyLocusError as exc:
    print("inside the cube:", exc)
print(f"min |det A|/L^3 over the 41^3 cube grid: {np.min(np.abs(det_a_normalized(geom, cube_grid(geom, 41)))):.3f}")

# Serial singularities: a link perpendicular to its own rail.
for s in serial_locus_planes(geom):
    print(f"leg {s.leg + 1}: normal {s.normal}, rim radius {s.radius:.3f} mm")
