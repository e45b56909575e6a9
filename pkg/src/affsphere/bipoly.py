"""Bivariate polynomials over exact (int/Fraction) or float coefficients.

Internal engine for the surface fields: positions, conormals, potentials and
area densities are all polynomials in (u, v), so jets, gradients and the
potential integration reduce to coefficient manipulation here.  Exactness is
preserved whenever the inputs are exact.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .paracomplex import is_exact


class BiPoly:
    """Polynomial sum of c[i,j] * u**i * v**j, held as a zero-free dict."""

    __slots__ = ("c", "_dense")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for (i, j), val in coeffs.items():
                if val != 0:
                    c[(int(i), int(j))] = val
        self.c = c
        self._dense = None

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, a):
        return cls({(0, 0): a})

    @classmethod
    def var_u(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_v(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_terms(cls, terms):
        return cls(dict(terms))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.c)
        for k, val in other.c.items():
            out[k] = out.get(k, 0) + val
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            out = {}
            for (i1, j1), a in self.c.items():
                for (i2, j2), b in other.c.items():
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, 0) + a * b
            return BiPoly(out)
        if self._is_scalar(other):
            return BiPoly({k: v * other for k, v in self.c.items()})
        return NotImplemented

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if self._is_scalar(other):
            return BiPoly.constant(other)
        return NotImplemented

    @staticmethod
    def _is_scalar(x):
        return isinstance(x, (int, float, Fraction)) and not isinstance(x, bool)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    # -- calculus ------------------------------------------------------

    def partial_u(self):
        return BiPoly({(i - 1, j): i * v for (i, j), v in self.c.items() if i > 0})

    def partial_v(self):
        return BiPoly({(i, j - 1): j * v for (i, j), v in self.c.items() if j > 0})

    def antiderivative_u(self):
        """Antiderivative in u vanishing on {u=0}; exact stays exact."""
        out = {}
        for (i, j), val in self.c.items():
            if is_exact(val):
                out[(i + 1, j)] = Fraction(val, i + 1)
            else:
                out[(i + 1, j)] = val / (i + 1)
        return BiPoly(out)

    def antiderivative_v(self):
        out = {}
        for (i, j), val in self.c.items():
            if is_exact(val):
                out[(i, j + 1)] = Fraction(val, j + 1)
            else:
                out[(i, j + 1)] = val / (j + 1)
        return BiPoly(out)

    def restrict_v(self, v0=0):
        """1-D coefficient list in u after substituting v = v0 (exact for exact v0)."""
        n = 1 + max((i for (i, j) in self.c), default=0)
        out = [0] * n
        for (i, j), val in self.c.items():
            out[i] = out[i] + val * (v0 ** j if j else 1)
        return out

    # -- evaluation ----------------------------------------------------

    def __call__(self, u, v):
        if isinstance(u, np.ndarray) or isinstance(v, np.ndarray):
            return self._eval_array(u, v)
        if isinstance(u, float) or isinstance(v, float):
            return float(self._eval_array(np.float64(u), np.float64(v)))
        acc = 0
        for (i, j), val in self.c.items():
            acc = acc + val * u**i * v**j
        return acc

    def _eval_array(self, u, v):
        if self._dense is None:
            if self.c:
                nu = 1 + max(i for (i, j) in self.c)
                nv = 1 + max(j for (i, j) in self.c)
            else:
                nu = nv = 1
            dense = np.zeros((nu, nv))
            for (i, j), val in self.c.items():
                dense[i, j] = float(val)
            self._dense = dense
        return np.polynomial.polynomial.polyval2d(np.asarray(u), np.asarray(v), self._dense)

    # -- inspection ------------------------------------------------------

    def coeff(self, i, j):
        return self.c.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.c

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.c.values())

    def max_abs_coeff(self):
        return max((abs(v) for v in self.c.values()), default=0)

    def total_degree(self):
        return max((i + j for (i, j) in self.c), default=-1)

    def as_float(self):
        return BiPoly({k: float(v) for k, v in self.c.items()})

    def terms(self):
        """Sorted ((i, j), coeff) pairs, graded lexicographic."""
        return sorted(self.c.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    def __repr__(self):
        if not self.c:
            return "BiPoly(0)"
        bits = []
        for (i, j), val in self.terms():
            mono = "".join(
                [f"u^{i}" if i > 1 else "u" if i == 1 else "",
                 f"v^{j}" if j > 1 else "v" if j == 1 else ""])
            bits.append(f"{val}*{mono}" if mono else f"{val}")
        return "BiPoly(" + " + ".join(bits) + ")"


def expand_planar_poly(poly):
    """Expand a ParaPoly/ComplexPoly into its two real bivariate components.

    Returns (real_part, unit_part) as BiPoly in (u, v), using the ring's own
    unit square: (R + unit*I)(u + unit*v) accumulated iteratively, so exact
    coefficients give exact expansions.
    """
    s = poly.SCALAR.UNIT_SQ
    re_acc = BiPoly()
    im_acc = BiPoly()
    # powers of z: start with z^0 = 1
    pow_re, pow_im = BiPoly.constant(1), BiPoly()
    u, v = BiPoly.var_u(), BiPoly.var_v()
    for k, c in enumerate(poly.coeffs):
        if k > 0:
            pow_re, pow_im = pow_re * u + s * (pow_im * v), pow_re * v + pow_im * u
        re_acc = re_acc + c.re * pow_re + s * (c.im * pow_im)
        im_acc = im_acc + c.re * pow_im + c.im * pow_re
    return re_acc, im_acc
