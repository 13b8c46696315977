"""Local densities of integral Jordan elements and the exact mass formula.

For T with elementary divisors a1 <= a2 <= a3 at p the local density has
a four-stratum closed form

    beta_p = p^{27 a1} c1              (a1 = a2 = a3)
           = p^{26 a1 + a3} c2         (a1 = a2 < a3)
           = p^{17 a1 + 10 a3} c2      (a1 < a2 = a3)
           = p^{17 a1 + 9 a2 + a3} c3  (a1 < a2 < a3)

with c1, c2, c3 explicit products of (1 - p^{-k}).  Everything here is
exact rational arithmetic; the mass formula consumes only the rational
constant 691/(2^15 3^6 5^2 7^2 13), never a transcendental value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic import ElemDivisors, genus_invariants, is_prime


def _prod_one_minus(p, ks):
    out = Fraction(1)
    for k in ks:
        out *= 1 - Fraction(1, p ** k)
    return out


@dataclass(frozen=True)
class DensityConstants:
    p: int
    c1: Fraction
    c2: Fraction
    c3: Fraction
    delta: Fraction

    def __post_init__(self):
        for v in (self.c1, self.c2, self.c3, self.delta):
            if not 0 < v < 1:
                raise ValueError(v)
        if self.delta != self.c1 * _prod_one_minus(self.p, (5, 9)):
            raise ValueError("delta/c1 mismatch")


@lru_cache(maxsize=None)
def constants(p: int) -> DensityConstants:
    if not is_prime(p):
        raise ValueError("p must be prime: %r" % (p,))
    return DensityConstants(
        p=p,
        c1=_prod_one_minus(p, (2, 6, 8, 12)),
        c2=_prod_one_minus(p, (2, 4, 6, 8)),
        c3=_prod_one_minus(p, (2, 4, 4, 6)),
        delta=_prod_one_minus(p, (2, 5, 6, 8, 9, 12)),
    )


def beta_exps(p: int, exps) -> Fraction:
    """Closed-form local density for the ascending exponent triple."""
    a1, a2, a3 = exps
    if not 0 <= a1 <= a2 <= a3:
        raise ValueError(exps)
    k = constants(p)
    if a1 == a2 == a3:
        return Fraction(p) ** (27 * a1) * k.c1
    if a1 == a2:
        return Fraction(p) ** (26 * a1 + a3) * k.c2
    if a2 == a3:
        return Fraction(p) ** (17 * a1 + 10 * a3) * k.c2
    return Fraction(p) ** (17 * a1 + 9 * a2 + a3) * k.c3


def beta_p(d: ElemDivisors) -> Fraction:
    return beta_exps(d.p, d.exps)


def alpha_p(d: ElemDivisors) -> Fraction:
    """p^{9(a1+a2+a3)} delta_p / beta_p."""
    return Fraction(d.p) ** (9 * d.total) * constants(d.p).delta / beta_p(d)


# ---------------------------------------------------------------------------
# Igusa series consistency:
#   sum over a1<=a2<=a3 of u^{a1+a2+a3} / beta_p  ==  1 / (c1 (1-u/p)(1-u/p^5)(1-u/p^9))


def igusa_lhs_coeff(p: int, m: int) -> Fraction:
    out = Fraction(0)
    for a1 in range(m // 3 + 1):
        for a2 in range(a1, (m - a1) // 2 + 1):
            a3 = m - a1 - a2
            out += 1 / beta_exps(p, (a1, a2, a3))
    return out


def igusa_rhs_coeff(p: int, m: int) -> Fraction:
    out = Fraction(0)
    for i in range(m + 1):
        for j in range(m - i + 1):
            k = m - i - j
            out += Fraction(1, p ** (i + 5 * j + 9 * k))
    return out / constants(p).c1


def igusa_verify(p: int, order: int):
    """Compare both u-series through u^order; returns (ok, rows)."""
    rows = []
    ok = True
    for m in range(order + 1):
        lhs = igusa_lhs_coeff(p, m)
        rhs = igusa_rhs_coeff(p, m)
        ok = ok and lhs == rhs
        rows.append({"m": m, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs})
    return ok, rows


# ---------------------------------------------------------------------------
# structure-group orders over Z/p^n


def group_orders(p: int, n: int = 1):
    """(#M(Z/p^n), #M'(Z/p^n)); the second is the multiplier-1 subgroup."""
    if n < 1:
        raise ValueError(n)
    if not is_prime(p):
        raise ValueError("p must be prime: %r" % (p,))
    m1 = p ** 36
    for k in (12, 9, 8, 6, 5, 2, 1):
        m1 *= p ** k - 1
    return p ** (79 * (n - 1)) * m1, p ** (78 * (n - 1)) * (m1 // (p - 1))


# ---------------------------------------------------------------------------
# mass formula


MASS_CONSTANT = Fraction(691, 2 ** 15 * 3 ** 6 * 5 ** 2 * 7 ** 2 * 13)


def mass(T) -> Fraction:
    """Exact mass of the genus of a positive definite integral element.

    mass = MASS_CONSTANT (det T)^9 prod_{p | det T} c1(p)/beta_p(T); the
    product of c1 over the remaining primes cancels symbolically against
    the zeta values hidden in MASS_CONSTANT.
    """
    if not T.is_positive():
        raise ValueError("mass needs a positive definite element")
    out = MASS_CONSTANT * Fraction(T.det()) ** 9
    for p, div in genus_invariants(T).items():
        out *= constants(p).c1 / beta_p(div)
    return out
