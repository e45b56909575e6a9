"""Synthesize improper affine spheres from curve pairs and export meshes.

A pair of planar polynomial curves (F, G) generates a graph surface
(x1, x2, phi) together with its conormal field; the signature of the affine
metric is picked by the coefficient ring (para-complex or complex).
"""

import os
import tempfile

import numpy as np

from affsphere.io import save_curve, write_grid
from affsphere.paracomplex import ComplexPoly, ParaPoly
from affsphere.surfaces import (
    Domain,
    HoloCurve,
    ParaCurve,
    compile_surface,
    graph_potential,
    sample_grid,
)

# the basic indefinite example: F = z^2, G = z^3
curve = ParaCurve(ParaPoly([0, 0, 1]), ParaPoly([0, 0, 0, 1]))
surf = compile_surface(curve)

print("signature:", surf.signature)
print("area density lambda =", surf.fields["density"])

s = surf.sample(0.5, 0.25)
print("position at (0.5, 0.25) =", np.round(s.position, 6))
print("conormal at (0.5, 0.25) =", np.round(s.conormal, 6))
print("unit normal             =", np.round(s.unit_normal, 6))

# the potential is a bivariate polynomial; exact coefficients in rational mode
phi = graph_potential(curve)
print("phi(1, 0) =", phi(1, 0), " phi(0, 1) =", phi(0, 1))

# second-order jets drive the downstream singularity tests
jet = surf.position_jet(0.5, 0.25)
print("psi_u  =", np.round(jet.du, 6))
print("psi_uu =", np.round(jet.duu, 6))

# a convex-signature surface from complex data: the elliptic paraboloid
bowl = HoloCurve(ComplexPoly.zero(), ComplexPoly([0, 1]))
print("paraboloid phi(u,v) at (1, 1):", compile_surface(bowl).fields["phi"](1.0, 1.0))

# grid sampling and mesh export (OBJ for viewers, CSV for plotting)
grid = sample_grid(curve, Domain(-1.2, 1.2, -1.2, 1.2), (48, 48))
out_dir = tempfile.mkdtemp(prefix="affsphere_demo_")
write_grid(grid, os.path.join(out_dir, "quad_cubic.obj"), "obj")
write_grid(grid, os.path.join(out_dir, "quad_cubic.csv"), "csv")
save_curve(curve, os.path.join(out_dir, "quad_cubic.json"))
print("wrote", sorted(os.listdir(out_dir)), "to", out_dir)

# the density vanishes exactly on the singular set u^2 - v^2 in {0, 4/9}
for p in ((2 / 3, 0.0), (0.5, 0.5), (0.9, 0.2)):
    print(f"lambda{p} = {surf.area_density(*p):+.6f}")
