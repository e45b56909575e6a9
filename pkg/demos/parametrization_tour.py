"""One surface, three coordinate systems: generator, curve pair, wave data.

A single polynomial generator f produces the same surface as the half-sum
curve pair, and an indefinite curve pair is equivalent to four univariate
wave polynomials; both correspondences are exact linear maps.
"""

from fractions import Fraction

import numpy as np

from affsphere.conversions import (
    blaschke_to_curve,
    cls_to_curve,
    cortes_to_holo,
    curve_to_blaschke,
)
from affsphere.paracomplex import ComplexPoly, ParaComplex, ParaPoly
from affsphere.surfaces import ParaCurve, compile_surface

# generator -> curve pair (indefinite signature)
f = ParaPoly([0, 0, 0, Fraction(1, 3)])  # f = z^3 / 3
curve = cls_to_curve(f)
print("generator f = z^3/3")
print("  F =", curve.F)
print("  G =", curve.G)

# the synthesized surface equals the direct graph construction over f
surf = compile_surface(curve)
df = f.derivative()
for u, v in ((0.5, -0.25), (1.25, 0.75)):
    z = ParaComplex(u, v)
    direct = np.array(
        [float(-df(z).im), v, float(u * df(z).im - f(z).im + f(ParaComplex(0, 0)).im)]
    )
    got = surf.sample(u, v).position
    print(f"  at ({u}, {v}): synthesized {np.round(got, 6)} direct {np.round(direct, 6)}")

# the complex-coefficient analogue gives the convex signature
bowl = cortes_to_holo(ComplexPoly([0, 0, Fraction(1, 2)]))
print("complex generator z^2/2 ->", bowl.signature, "curve, F =", bowl.F)

# curve pair <-> wave polynomials, exact both ways
pair = ParaCurve(
    ParaPoly([0, ParaComplex(Fraction(1, 2), Fraction(-2, 3))]),
    ParaPoly([Fraction(1), 0, ParaComplex(0, Fraction(5, 2))]),
)
u1, v1, u2, v2 = curve_to_blaschke(pair)
print("wave data of the pair:")
for name, poly in (("U1", u1), ("V1", v1), ("U2", u2), ("V2", v2)):
    print(f"  {name} =", poly)

back = blaschke_to_curve(u1, v1, u2, v2)
print("round trip exact:", back.F == pair.F and back.G == pair.G)
