"""Local Siegel series polynomials and their Laurent symmetrization.

For the diagonal class p^{m1} | p^{m1+m2} | p^{m1+m3} (0 <= m1,
0 <= m2 <= m3) the series collapses to a polynomial f(X) of degree
m = 3 m1 + m2 + m3 with integer coefficients and constant term 1.  Two
independent routes are implemented:

  * f_poly        eight rational-function terms summed over a common
                  denominator; every pole cancels exactly,
  * f_poly_oracle a two-coefficient recursion in m1 on top of the
                  explicit base polynomial at m1 = 0.

tilde(X) = X^m f(X^{-2}) is supported on {-m, -m+2, ..., m} and is
invariant under X -> 1/X.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import LaurentPoly
from .padic import is_prime


@dataclass(frozen=True)
class SiegelPoly:
    p: int
    m: tuple
    poly: LaurentPoly

    def __post_init__(self):
        m1, m2, m3 = self.m
        if m1 < 0 or not 0 <= m2 <= m3:
            raise ValueError(self.m)
        deg = 3 * m1 + m2 + m3
        if self.poly.valuation() < 0 or self.poly.degree() != deg:
            raise ArithmeticError("closed-form transcription error: degree")
        if self.poly.coeff(0) != 1:
            raise ArithmeticError("closed-form transcription error: f(0) != 1")

    @property
    def weight(self):
        """m = 3 m1 + m2 + m3 = ord_p(det)."""
        m1, m2, m3 = self.m
        return 3 * m1 + m2 + m3

    def coeffs(self):
        return [self.poly.coeff(e) for e in range(self.weight + 1)]

    def evaluate(self, x):
        return self.poly.evaluate(x)


class _Rat:
    """num/den with Laurent polynomial parts; exact arithmetic only."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num if isinstance(num, LaurentPoly) else LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.const(1)
        self.den = den if isinstance(den, LaurentPoly) else LaurentPoly.const(den)
        if not self.den:
            raise ZeroDivisionError

    def __add__(self, other):
        return _Rat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return _Rat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        if not isinstance(other, _Rat):
            other = _Rat(other)
        return _Rat(self.num * other.num, self.den * other.den)

    def __neg__(self):
        return _Rat(-self.num, self.den)

    def subst_inverse(self):
        return _Rat(self.num.subst_inverse(), self.den.subst_inverse())

    def poly(self) -> LaurentPoly:
        return self.num.divide_exact(self.den)


def _lin(c, inv=False):
    """1 - c X (or 1 - c / X)."""
    return LaurentPoly("X", {0: 1, (-1 if inv else 1): -Fraction(c)})


def _mono(coeff, exp):
    return LaurentPoly.monomial(Fraction(coeff), exp)


def _finish(p, m, q: LaurentPoly) -> SiegelPoly:
    ints = {}
    for e, v in q.c.items():
        v = Fraction(v)
        if v.denominator != 1:
            raise ArithmeticError("closed-form transcription error: non-integer")
        ints[e] = int(v)
    return SiegelPoly(p, tuple(m), LaurentPoly("X", ints))


def _check_args(p, m1, m2, m3):
    if not is_prime(p):
        raise ValueError("p must be prime: %r" % (p,))
    if m1 < 0 or not 0 <= m2 <= m3:
        raise ValueError((m1, m2, m3))


def f_poly(p: int, m1: int, m2: int, m3: int) -> SiegelPoly:
    """Eight-term closed form, summed exactly."""
    _check_args(p, m1, m2, m3)
    p4, p8 = Fraction(p) ** 4, Fraction(p) ** 8
    p4i = 1 / p4
    d_plus = _lin(1) * _lin(p4) * _lin(p8)
    d_minus = _lin(1, True) * _lin(p4, True) * _lin(p8, True)
    d5 = _lin(1) * _lin(1) * _lin(p4)
    d6 = _lin(1, True) * _lin(1, True) * _lin(p4, True)
    d7 = _lin(1) * _lin(1) * _lin(p4i)
    d8 = _lin(1, True) * _lin(1, True) * _lin(p4i, True)
    terms = [
        _Rat(_mono(1, 0), d_plus),
        _Rat(_mono(1, 3 * m1 + m2 + m3), d_minus),
        _Rat(_mono(-(p ** (8 * m1 + 8)), m1 + 1), d_plus),
        _Rat(_mono(-(p ** (8 * m1 + 8)), 2 * m1 + m2 + m3 - 1), d_minus),
        _Rat(_mono(-(p ** (8 * m1 + 4 * (m2 + 1))), m1 + m2 + 1), d5),
        _Rat(_mono(-(p ** (8 * m1 + 4 * (m2 + 1))), 2 * m1 + m3 - 1), d6),
        _Rat(_mono(-(p ** (8 * m1 + 4 * m2)), m1 + m3 + 1), d7),
        _Rat(_mono(-(p ** (8 * m1 + 4 * m2)), 2 * m1 + m2 - 1), d8),
    ]
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return _finish(p, (m1, m2, m3), total.poly())


def _base_poly(p: int, m2: int, m3: int) -> LaurentPoly:
    """sum_k (p^4 X)^k (1 + X + ... + X^{m2+m3-2k}) for k = 0..m2."""
    out = LaurentPoly.zero("X")
    for k in range(m2 + 1):
        n = m2 + m3 + 1 - 2 * k
        geo = LaurentPoly("X", {e: 1 for e in range(n)})
        out = out + _mono(p ** (4 * k), k) * geo
    return out


def f_poly_oracle(p: int, m1: int, m2: int, m3: int) -> SiegelPoly:
    """Recursion route: base polynomial plus the C0/C1 step in m1.

    f = f0(X) (C0(1/X) X^{3m1} + C1(1/X) p^{8m1} X^{2m1}
               + C1(X) p^{8m1} X^{m1} + C0(X)).
    """
    _check_args(p, m1, m2, m3)
    p4, p8 = Fraction(p) ** 4, Fraction(p) ** 8
    f0 = _base_poly(p, m2, m3)
    fm = _base_poly(p, m2 - 1, m3 - 1) if m2 >= 1 else LaurentPoly.zero("X")
    c0 = _Rat(_mono(1, 0), _lin(1) * _lin(p4) * _lin(p8) * f0)
    c1_num = (f0 - fm.shift(2)) * _lin(p8) - LaurentPoly(
        "X", {0: 1, 1: 1 + p4}
    )
    c1 = _Rat(c1_num, _lin(p8) * _lin(1) * _lin(1 / p4) * f0)
    bracket = (
        c0.subst_inverse() * _Rat(_mono(1, 3 * m1))
        + c1.subst_inverse() * _Rat(_mono(p ** (8 * m1), 2 * m1))
        + c1 * _Rat(_mono(p ** (8 * m1), m1))
        + c0
    )
    total = bracket * _Rat(f0)
    return _finish(p, (m1, m2, m3), total.poly())


def tilde_f(s: SiegelPoly) -> LaurentPoly:
    """X^m f(X^{-2}); palindromic with support in {-m, ..., m} step 2."""
    t = s.poly.subst_power(-2).shift(s.weight)
    if t != t.subst_inverse():
        raise ArithmeticError("symmetrized series is not palindromic")
    return t


def symmetric_coefficients(t: LaurentPoly, m: int):
    """c_j with t = sum_{j>0} c_j (X^j + X^-j) + [m even] c_0, j = m, m-2, ...

    Returned in descending j order, ending at j = 1 or j = 0.
    """
    if t != t.subst_inverse():
        raise ValueError("not palindromic")
    for e in t.support():
        if (e - m) % 2 or abs(e) > m:
            raise ValueError("support incompatible with weight %d" % m)
    return [t.coeff(j) for j in range(m, -1, -2)]
