"""Split-complex arithmetic, para-CR structure, d'Alembert decomposition."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affsphere.paracomplex import (
    ComplexPoly,
    ComplexScalar,
    DAlembertPair,
    ParaComplex,
    ParaPoly,
    Poly1,
    para_cr_residual,
    para_to_dalembert,
)


def rationals(bound=4, den=12):
    return st.fractions(
        min_value=-bound, max_value=bound, max_denominator=den
    )


def para_scalars():
    return st.builds(ParaComplex, rationals(), rationals())


def para_polys(max_deg=4):
    return st.lists(para_scalars(), min_size=0, max_size=max_deg + 1).map(ParaPoly)


# -- scalar ring ------------------------------------------------------------


def test_null_cone_zero_divisor():
    a = ParaComplex(1, 1)
    b = ParaComplex(1, -1)
    assert a * b == ParaComplex(0, 0)


def test_modulus_definition():
    assert ParaComplex(3, 2).modulus() == 5
    # conj(u+jv)*(u+jv) = u^2 - v^2 at sample rationals
    for u, v in [(Fraction(1, 3), Fraction(2, 5)), (2, -7), (Fraction(-4, 9), 0)]:
        z = ParaComplex(u, v)
        w = z.conjugate() * z
        assert w == ParaComplex(u * u - v * v, 0)


def test_complex_sibling_modulus_is_positive_definite():
    assert ComplexScalar(3, 2).modulus() == 13
    assert ComplexScalar(0, 1) * ComplexScalar(0, 1) == ComplexScalar(-1, 0)


def test_no_division():
    with pytest.raises(TypeError):
        ParaComplex(1, 0) / ParaComplex(2, 0)


@given(para_scalars(), para_scalars(), para_scalars())
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(para_scalars(), para_scalars())
def test_modulus_multiplicative(a, b):
    assert (a * b).modulus() == a.modulus() * b.modulus()


@given(para_scalars(), para_scalars())
def test_conjugation_is_ring_homomorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


# -- polynomial evaluation and derivative ------------------------------------


def test_eval_z2_z3_components():
    # z^2 -> (u^2+v^2) + j(2uv); z^3 -> (u^3+3uv^2) + j(3u^2v+v^3)
    P2 = ParaPoly.monomial(2)
    P3 = ParaPoly.monomial(3)
    for u, v in [(Fraction(1, 2), Fraction(1, 3)), (2, -1), (Fraction(-3, 4), Fraction(5, 7))]:
        z = ParaComplex(u, v)
        w2 = P2(z)
        assert w2 == ParaComplex(u * u + v * v, 2 * u * v)
        w3 = P3(z)
        assert w3 == ParaComplex(u**3 + 3 * u * v**2, 3 * u**2 * v + v**3)


def test_eval_constant():
    P = ParaPoly([1])
    assert P(ParaComplex(Fraction(7, 3), -2)) == ParaComplex(1, 0)


def test_derivative():
    assert ParaPoly.monomial(2).derivative() == ParaPoly([0, 2])
    P3 = ParaPoly.monomial(3)
    assert P3.derivative()(ParaComplex(1, 0)) == ParaComplex(3, 0)
    assert ParaPoly([5]).derivative().is_zero()
    assert ParaPoly.monomial(4).degree == 4
    assert ParaPoly.monomial(4).derivative().degree == 3


# -- para-CR residual ---------------------------------------------------------


def test_para_cr_residual_on_polynomial():
    P = ParaPoly.monomial(2)

    def m(u, v):
        w = P(ParaComplex(u, v))
        return (w.re, w.im)

    h = 1e-5
    for p in [(0.3, -0.7), (1.1, 0.2)]:
        r1, r2 = para_cr_residual(m, p, h)
        assert abs(r1) <= 10 * h**2
        assert abs(r2) <= 10 * h**2


def test_para_cr_residual_flags_non_holomorphic():
    # map (u, v) -> (u, 0): f1_u - f2_v = 1, f1_v - f2_u = 0
    r1, r2 = para_cr_residual(lambda u, v: (u, 0.0), (0.0, 0.0))
    assert r1 == pytest.approx(1.0, abs=1e-9)
    assert r2 == pytest.approx(0.0, abs=1e-9)


def test_para_cr_residual_degree_three_plus_one():
    P = ParaPoly([0, 1, 0, 1])  # z^3 + z

    def m(u, v):
        w = P(ParaComplex(u, v))
        return (w.re, w.im)

    r1, r2 = para_cr_residual(m, (1.0, 2.0))
    assert abs(r1) <= 1e-8
    assert abs(r2) <= 1e-8


# -- d'Alembert decomposition -------------------------------------------------


def test_dalembert_of_z():
    pair = para_to_dalembert(ParaPoly.monomial(1))
    assert pair.rho == Poly1([0, Fraction(1, 2)])
    assert pair.sigma == Poly1([0, Fraction(1, 2)])


def test_dalembert_of_constant_j():
    pair = para_to_dalembert(ParaPoly([ParaComplex(0, 1)]))
    assert pair.rho == Poly1([Fraction(1, 2)])
    assert pair.sigma == Poly1([Fraction(-1, 2)])


def test_dalembert_round_trip_pointwise():
    F = ParaPoly([ParaComplex(0, 0), ParaComplex(0, 1), ParaComplex(1, 0)])  # z^2 + jz
    m = para_to_dalembert(F).as_map()
    pts = [(Fraction(k, 7), Fraction(3 - k, 5)) for k in range(-10, 10)]
    for u, v in pts:
        w = F(ParaComplex(u, v))
        assert m(u, v) == (w.re, w.im)


@given(para_polys())
def test_dalembert_round_trip_coefficient_exact(F):
    assert para_to_dalembert(F).to_poly() == F


@given(para_polys(max_deg=3), st.tuples(rationals(2), rationals(2)))
def test_dalembert_map_matches_eval(F, p):
    u, v = p
    w = F(ParaComplex(u, v))
    assert para_to_dalembert(F).as_map()(u, v) == (w.re, w.im)


def test_dalembert_reconstruct_structure():
    rho = Poly1([1, Fraction(1, 2)])
    sigma = Poly1([0, 2, 1])
    F = DAlembertPair(rho, sigma).to_poly()
    # coefficient k is (rho_k + sigma_k) + j (rho_k - sigma_k)
    assert F.coeffs[0] == ParaComplex(1, 1)
    assert F.coeffs[1] == ParaComplex(Fraction(5, 2), Fraction(-3, 2))
    assert F.coeffs[2] == ParaComplex(1, -1)


# -- complex polynomial sibling ----------------------------------------------


def test_complex_poly_expansion_point():
    P = ComplexPoly.monomial(2)
    w = P(ComplexScalar(Fraction(1, 2), Fraction(1, 3)))
    assert w == ComplexScalar(Fraction(1, 4) - Fraction(1, 9), Fraction(1, 3))


def test_complex_poly_antiderivative_exact():
    P = ComplexPoly([ComplexScalar(1, 1), ComplexScalar(0, 3)])
    Q = P.antiderivative()
    assert Q.coeffs[0] == ComplexScalar(0, 0)
    assert Q.coeffs[1] == ComplexScalar(1, 1)
    assert Q.coeffs[2] == ComplexScalar(0, Fraction(3, 2))


@settings(max_examples=30)
@given(st.lists(rationals(2), min_size=1, max_size=4))
def test_poly1_derivative_antiderivative(cs):
    p = Poly1(cs)
    q = Poly1([0] + [Fraction(c, k + 1) for k, c in enumerate(cs)])
    assert q.derivative() == p
