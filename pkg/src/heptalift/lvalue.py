"""Numeric symmetric-square L-values, the Petersson-norm period, and the
rationality probe.

The symmetric-square L-function of an eigenform of weight 2k - 8 is taken in
the analytic normalization: the local factor at p is
(1 - alpha_p^2 p^{-s})(1 - p^{-s})(1 - alpha_p^{-2} p^{-s}) with unitary
Satake parameter alpha_p, so the Dirichlet series converges for Re s > 1 and
the functional equation exchanges s and 1 - s.  The argument s here matches
the classical argument s + 2k - 9; the evaluation points s = 1, 5, 9 sit at
or right of the classical center, where smoothed summation converges fast.

The completed function is Lambda(s) = GammaR(s+1) GammaC(s+2k-9) L(s), with
GammaR(s) = pi^{-s/2} Gamma(s/2) and GammaC(s) = 2 (2 pi)^{-s} Gamma(s),
conductor 1 and sign +1.  The archimedean factor is the one analytic input
not pinned by the exact modules; the s = 9 two-method agreement check in the
test suite validates it numerically.

Lambda(s) is evaluated by the smoothed series

    Lambda(s) = sum_n b(n) [J(s, n) + J(1 - s, n)],
    J(z, n)   = (1/2 pi i) int_(c0) gamma_infinity(z + w, k) n^{-(z+w)} dw/w,

obtained by shifting the contour of int Lambda(s + w) dw/w across the pole
at w = 0 and applying the functional equation (Lambda is entire for a level
one cusp form).  Each J is computed by the trapezoid rule on a vertical
line: the integrand is analytic in a strip around the line and decays like
exp(-3 pi |t| / 4), so the rule converges geometrically and one table of
Gamma values serves every n.

Summation is serial in ascending n, so results are bit-identical across
runs and worker counts.  Error bounds are conservative but heuristic at the
Gamma-kernel level; they are propagated through BigFloat, not proof-grade
intervals.
"""

from fractions import Fraction
from math import isqrt

import mpmath

from .exactnum import BigFloat, rational_reconstruct
from .genfun import gamma_k
from .lift import sym2_coeffs

__all__ = [
    "gamma_infinity",
    "period",
    "period_report",
    "rationality_probe",
    "reconstruct_ratio",
    "sym2_dirichlet_coeffs",
    "sym2_dirichlet_sum",
    "sym2_lvalue",
    "triple_divisor_count",
]

CRITICAL_POINTS = (1, 5, 9)
MAX_DIGITS = 50


def triple_divisor_count(n):
    """Number of ordered factorizations n = d1*d2*d3 (the d_3 bound)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out *= (e + 1) * (e + 2) // 2
        p += 1 if p == 2 else 2
    if m > 1:
        out *= 3
    return out


def _local_series(eigen, p, emax):
    """b(p^0), ..., b(p^emax): inverse of the local symmetric-square factor."""
    _, c1, c2, c3 = sym2_coeffs(eigen.a(p), p, eigen.k)
    out = [Fraction(1)]
    for e in range(1, emax + 1):
        v = -c1 * out[e - 1]
        if e >= 2:
            v -= c2 * out[e - 2]
        if e >= 3:
            v -= c3 * out[e - 3]
        out.append(v)
    return out


def sym2_dirichlet_coeffs(eigen, N):
    """Exact coefficients b(1), ..., b(N) of the symmetric-square series.

    Returned as a list with entry i holding b(i+1).  The coefficients are
    multiplicative with |b(n)| <= d_3(n).  Raises KeyError when the
    eigenvalue table misses a needed prime.
    """
    if N < 1:
        raise ValueError("N must be positive")
    spf = list(range(N + 1))
    for q in range(2, isqrt(N) + 1):
        if spf[q] == q:
            for m in range(q * q, N + 1, q):
                if spf[m] == m:
                    spf[m] = q
    b = [Fraction(1)] * (N + 1)
    local = {}
    for n in range(2, N + 1):
        p = spf[n]
        m, e = n, 0
        while m % p == 0:
            m //= p
            e += 1
        loc = local.get(p)
        if loc is None or len(loc) <= e:
            loc = _local_series(eigen, p, max(e, 4))
            local[p] = loc
        b[n] = b[m] * loc[e]
    return b[1:]


def gamma_infinity(s, k):
    """Archimedean factor GammaR(s+1) GammaC(s+2k-9) as an mpmath value.

    This is the standard completed symmetric-square factor for a level one
    form of weight 2k - 8; accepts real or complex s.
    """
    w = 2 * k - 9
    s = mpmath.mpmathify(s)
    return (
        mpmath.pi ** (-(s + 1) / 2)
        * mpmath.gamma((s + 1) / 2)
        * 2
        * (2 * mpmath.pi) ** (-(s + w))
        * mpmath.gamma(s + w)
    )


class _Kernel:
    """Trapezoid data for J(z, n) on the vertical line Re w = c0.

    The abscissa keeps Re(z + w) >= 6 (absolute convergence with room) and
    the pole of 1/w at distance >= 6.  The step is sized from the width of
    the pole-free strip; one table of node values G_j serves every n because
    n enters only through the rotation n^{-i j h} = r^j.
    """

    def __init__(self, z, k, digits, c0=None):
        self.z = mpmath.mpf(z)
        if c0 is None:
            c0 = max(6, 6 - z)
        self.c0 = mpmath.mpf(c0)
        strip = min(float(self.c0), float(self.z + self.c0 + 1)) - 0.5
        if strip <= 0:
            raise ValueError("contour abscissa too close to a pole")
        eps = mpmath.mpf(10) ** (-(digits + 12))
        self.h = 2 * mpmath.pi * strip / mpmath.log(1 / eps)
        nodes = []
        gmax = mpmath.mpf(0)
        j = 0
        low = 0
        while True:
            wj = mpmath.mpc(self.c0, j * self.h)
            g = gamma_infinity(self.z + wj, k) / wj
            nodes.append(g)
            gmax = max(gmax, abs(g))
            low = low + 1 if abs(g) < gmax * eps else 0
            if low >= 3 and j > 8:
                break
            if j > 200000:
                raise ArithmeticError("kernel quadrature failed to truncate")
            j += 1
        self.nodes = nodes
        gsum = sum((abs(g) for g in nodes), mpmath.mpf(0))
        # heuristic discretization + truncation bound with safety factor;
        # the residual n-dependence n^{strip - (z + c0)} is at most n^{1/2}
        self.base_err = 100 * (self.h / mpmath.pi) * gsum * eps
        self.n_pow = strip - float(self.z + self.c0)

    def __call__(self, n):
        lnn = mpmath.log(n)
        r = mpmath.expj(-self.h * lnn)
        acc = self.nodes[0] / 2
        rp = mpmath.mpc(1)
        for g in self.nodes[1:]:
            rp = rp * r
            acc = acc + g * rp
        scale = mpmath.exp(-(self.z + self.c0) * lnn)
        val = (self.h / mpmath.pi) * scale * acc.real
        err = self.base_err * mpmath.mpf(n) ** self.n_pow
        return BigFloat(val, err)


def _smoothed_lambda(eigen, s, digits):
    """Completed value Lambda(s) by the smoothed series; returns (value, cutoff)."""
    k = eigen.k
    ker_s = _Kernel(s, k, digits)
    ker_r = _Kernel(1 - s, k, digits)
    eps_term = abs(gamma_infinity(s, k)) * mpmath.mpf(10) ** (-(digits + 6))
    total = BigFloat(0)
    bs = []
    n = 0
    calm = 0
    while True:
        n += 1
        if n > len(bs):
            try:
                bs = sym2_dirichlet_coeffs(eigen, max(2 * len(bs), 64))
            except KeyError as exc:
                raise ValueError(f"need more eigenvalues: {exc}") from None
        js = ker_s(n)
        jr = ker_r(n)
        total = total + BigFloat.exact(bs[n - 1]) * (js + jr)
        bound = triple_divisor_count(n) * (
            abs(js.value) + js.err + abs(jr.value) + jr.err
        )
        calm = calm + 1 if bound < eps_term else 0
        if calm >= 5 and n >= 8:
            break
        if n > 100000:
            raise ValueError("need more eigenvalues: series did not settle")
    return BigFloat(total.value, total.err + 10 * eps_term), n


def sym2_lvalue(eigen, s, digits=20):
    """L(s, Sym^2) at s in {1, 5, 9} as a BigFloat with an error bound."""
    if s not in CRITICAL_POINTS:
        raise ValueError("s must be one of 1, 5, 9")
    if not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must lie in [1, {MAX_DIGITS}]")
    with mpmath.workdps(digits + 18):
        lam, _ = _smoothed_lambda(eigen, s, digits)
        g = gamma_infinity(s, eigen.k)
        ulp = abs(g) * mpmath.mpf(2) ** (-mpmath.mp.prec + 2)
        out = lam / BigFloat(g, ulp)
    return out


def sym2_dirichlet_sum(eigen, s, N, digits=20):
    """Plain truncated sum of b(n) n^{-s} over n <= N, the cross-check route.

    Needs s > 1.  The error slot holds a heuristic tail estimate based on
    the average size d_3(n) ~ (log n)^2 / 2.
    """
    if s <= 1:
        raise ValueError("plain summation needs s > 1")
    with mpmath.workdps(digits + 15):
        bs = sym2_dirichlet_coeffs(eigen, N)
        total = mpmath.mpf(0)
        for n in range(1, N + 1):
            q = bs[n - 1]
            total += mpmath.mpf(q.numerator) / q.denominator / mpmath.mpf(n) ** s
        tail = (
            (mpmath.log(N) + 2) ** 2
            * mpmath.mpf(N) ** (1 - s)
            / (2 * (s - 1))
        )
        out = BigFloat(total, tail)
    return out


def period_report(k, eigen, digits=20):
    """Period and its factors: gamma_k, pi power, and the three L-values."""
    if k != eigen.k:
        raise ValueError("weight parameter does not match the eigenvalue table")
    lvals = [sym2_lvalue(eigen, s, digits) for s in CRITICAL_POINTS]
    g = gamma_k(k)
    with mpmath.workdps(digits + 18):
        pi_pow = mpmath.pi ** (-(6 * k + 3))
        ulp = abs(pi_pow) * mpmath.mpf(2) ** (-mpmath.mp.prec + 4)
        value = BigFloat.exact(g) * BigFloat(pi_pow, ulp)
        for lv in lvals:
            value = value * lv
    return {
        "value": value,
        "gamma_k": g,
        "pi_power": -(6 * k + 3),
        "lvalues": lvals,
    }


def period(k, eigen, digits=20):
    """Petersson norm of the lift: gamma_k(k) pi^{-6k-3} L(1) L(5) L(9)."""
    return period_report(k, eigen, digits)["value"]


def _mpf_fraction(x):
    """Exact Fraction equal to a finite mpf."""
    x = mpmath.mpf(x)
    if not mpmath.isfinite(x):
        raise ValueError("value is not finite")
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    # the mantissa may be a gmpy2 integer when mpmath runs on that backend
    q = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -q if sign else q


def reconstruct_ratio(value, digits, max_denominator=10 ** 12):
    """Rational candidate for an error-tracked ratio, or None if too fuzzy."""
    x = _mpf_fraction(value.value)
    eb = _mpf_fraction(value.err) if value.err else Fraction(0)
    eb = max(2 * eb, Fraction(1, 10 ** (digits + 2)))
    if eb > Fraction(1, 10 ** 6):
        return None
    return rational_reconstruct(x, eb, max_denominator)


def rationality_probe(eigen, k, digits=(20, 30)):
    """Candidate rationals rho_5 = L(5)/(L(1) pi^8), rho_9 = L(9)/(L(1) pi^16).

    Each ratio is reconstructed at the two working precisions and reported
    only when both reconstructions agree; None marks failure to stabilize.
    """
    if k != eigen.k:
        raise ValueError("weight parameter does not match the eigenvalue table")
    d1, d2 = digits
    cands = {"r5": [], "r9": []}
    for d in (d1, d2):
        with mpmath.workdps(d + 20):
            l1 = sym2_lvalue(eigen, 1, d)
            pairs = (("r5", sym2_lvalue(eigen, 5, d), 8),
                     ("r9", sym2_lvalue(eigen, 9, d), 16))
            for key, lv, h in pairs:
                pw = mpmath.pi ** h
                den = l1 * BigFloat(pw, abs(pw) * mpmath.mpf(2) ** (-mpmath.mp.prec + 4))
                cands[key].append(reconstruct_ratio(lv / den, d))
    out = {}
    for key, (q1, q2) in cands.items():
        out[key] = q1 if (q1 is not None and q1 == q2) else None
    return out
