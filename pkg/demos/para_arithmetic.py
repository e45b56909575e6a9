"""Tour of the para-complex building blocks.

Para-complex numbers u + jv square j to +1 instead of -1, which turns
polynomial evaluation into a pair of wave equations.  Everything here is
exact when coefficients are ints or Fractions.
"""

from fractions import Fraction

from affsphere import (
    ParaComplex,
    ParaPoly,
    Poly1,
    para_cr_residual,
    para_to_dalembert,
)

# arithmetic: j**2 = +1, so (1+j)(1-j) = 0; zero divisors are the point
j = ParaComplex(0, 1)
print("j * j              =", j * j)
print("(1+j)(1-j)         =", ParaComplex(1, 1) * ParaComplex(1, -1))
print("modulus of 3 + 2j  =", ParaComplex(3, 2).modulus())  # re^2 - im^2

# polynomials in z = u + jv evaluate exactly, Fractions preserved
p = ParaPoly([Fraction(1, 2), 0, ParaComplex(0, Fraction(1, 3))])
z = ParaComplex(Fraction(1, 4), Fraction(-1, 2))
print("p(1/4 - j/2)       =", p(z))
print("p'(z)              =", p.derivative()(z))

# a para-holomorphic map satisfies f1_u = f2_v and f1_v = f2_u; check a
# black-box version of z**3 by finite differences
cube = ParaPoly.monomial(3)


def cube_map(u, v):
    w = cube(ParaComplex(u, v))
    return (float(w.re), float(w.im))


r1, r2 = para_cr_residual(cube_map, (0.7, -0.4))
print("wave-equation residuals for z^3 at (0.7, -0.4):", f"{r1:.2e}, {r2:.2e}")

# the d'Alembert split writes any para-holomorphic polynomial as left and
# right traveling waves rho(u+v) and sigma(u-v)
pair = para_to_dalembert(ParaPoly([0, 1, ParaComplex(2, -1)]))
print("rho coefficients   =", list(pair.rho.coeffs))
print("sigma coefficients =", list(pair.sigma.coeffs))

# reconstruct: evaluation through the wave pair matches the polynomial
f1, f2 = pair.as_map()(0.3, 0.9)
direct = ParaPoly([0, 1, ParaComplex(2, -1)])(ParaComplex(0.3, 0.9))
print("wave evaluation    =", (f1, f2))
print("direct evaluation  =", (float(direct.re), float(direct.im)))

# univariate wave factors expose real roots; useful for singular lines
q = Poly1([-1, 0, 4])  # 4t^2 - 1
print("roots of 4t^2 - 1  =", q.real_roots())
