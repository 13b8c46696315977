"""Hecke-eigenvalue data, Satake power sums, and Fourier coefficients of the
lifted form, together with its local L-factor descriptions.

The coefficient of a positive definite integral element T is
det(T)^{(2k-9)/2} times a product of local factors, one per prime dividing
det(T).  The half-integral power of p is never evaluated: it is distributed
into the local factor and paired with the parity of the symmetrized Siegel
polynomial, so every exponent is an integer and the arithmetic stays exact.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic import genus_invariants
from .siegel import f_poly, symmetric_coefficients, tilde_f


# ---------------------------------------------------------------------------
# Coefficients of the weight-12 elliptic generator


def _trunc_sqr(coeffs, order):
    """Truncated square of an integer coefficient list, via packed integers.

    Coefficients are packed into one big integer, little end first, with a
    slot width large enough that product slots cannot overflow; one big
    multiplication then performs the whole convolution.  Signed inputs are
    split as c = pos - neg so each packed integer has nonnegative slots.
    """
    c = list(coeffs[: order + 1])
    pos = [v if v > 0 else 0 for v in c]
    neg = [-v if v < 0 else 0 for v in c]
    maxbits = max(v.bit_length() for v in pos + neg)
    width = 2 * maxbits + (order + 1).bit_length() + 2
    wb = (width + 7) // 8

    def pack(a):
        buf = bytearray()
        for v in a:
            buf += v.to_bytes(wb, "little")
        return int.from_bytes(buf, "little")

    def unpack(x):
        nbytes = max((order + 1) * wb, (x.bit_length() + 7) // 8) + wb
        b = x.to_bytes(nbytes, "little")
        return [int.from_bytes(b[i * wb : (i + 1) * wb], "little") for i in range(order + 1)]

    pp = unpack(pack(pos) ** 2)
    pn = unpack(pack(pos) * pack(neg))
    nn = unpack(pack(neg) ** 2)
    return [pp[i] - 2 * pn[i] + nn[i] for i in range(order + 1)]


@lru_cache(maxsize=8)
def tau_table(N):
    """Coefficients tau(1..N) of the discriminant cusp form, as a tuple.

    The cube of the eta product is the sparse series
    J = sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}, so the q-expansion follows
    from three truncated squarings: Delta / q = J^8.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    order = N - 1
    J = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        J[n * (n + 1) // 2] = (2 * n + 1) if n % 2 == 0 else -(2 * n + 1)
        n += 1
    out = J
    for _ in range(3):
        out = _trunc_sqr(out, order)
    return tuple(out)


# ---------------------------------------------------------------------------
# Eigenvalue data


@dataclass(frozen=True)
class EigenData:
    """Eigenvalues a_f(p) of a primitive form of weight 2k - 8.

    k is the half-weight of the lift (the lift has weight 2k); table maps
    each available prime to its exact eigenvalue.  Ingest enforces the
    sharp bound a_f(p)^2 <= 4 p^{2k-9}.
    """

    k: int
    table: dict

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 10:
            raise ValueError("k must be an integer >= 10")
        for p, a in self.table.items():
            if a * a > 4 * p ** (2 * self.k - 9):
                raise ValueError("eigenvalue at p=%d violates the coefficient bound" % p)

    def a(self, p):
        if p not in self.table:
            raise KeyError("no eigenvalue ingested for prime %d" % p)
        return self.table[p]


def eigen_delta(max_prime=100):
    """Built-in EigenData for the weight-12 generator (k = 10)."""
    taus = tau_table(max_prime)
    table = {}
    for p in range(2, max_prime + 1):
        if all(p % q for q in range(2, int(p ** 0.5) + 1)):
            table[p] = taus[p - 1]
    return EigenData(10, table)


def eigen_from_rows(k, rows):
    """EigenData from an iterable of (p, a_p) pairs."""
    table = {}
    for p, a in rows:
        p = int(p)
        a = Fraction(a) if not isinstance(a, int) else a
        if a == int(a):
            a = int(a)
        table[p] = a
    return EigenData(k, table)


def eigen_from_csv(path, k):
    """EigenData from a CSV file with header 'p,a_p', one prime per row."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["p", "a_p"]:
            raise ValueError("eigenvalue CSV needs the header 'p,a_p'")
        rows = [(row["p"], Fraction(row["a_p"])) for row in reader]
    return eigen_from_rows(k, rows)


# ---------------------------------------------------------------------------
# Satake power sums and Fourier coefficients


def satake_power_sums(a_p, p, k, jmax):
    """t_j = p^{j(2k-9)/2} (alpha^j + alpha^{-j}) for j = 0..jmax, exactly.

    t_0 = 2, t_1 = a_p, t_{j+1} = a_p t_j - p^{2k-9} t_{j-1}.
    """
    if jmax < 0:
        raise ValueError("jmax must be >= 0")
    q = p ** (2 * k - 9)
    out = [2]
    if jmax >= 1:
        out.append(a_p)
    for _ in range(2, jmax + 1):
        out.append(a_p * out[-1] - q * out[-2])
    return out


def local_factor(p, exps, eigen):
    """The factor at p of a coefficient with elementary divisors exps at p.

    Equals p^{m(2k-9)/2} tilde_f(alpha_p) for m = sum(exps): the symmetrized
    coefficients c_j pair with the power sums t_j, and j = m (mod 2) keeps
    all exponents integral.
    """
    a1, a2, a3 = exps
    m = a1 + a2 + a3
    if m == 0:
        return 1
    cs = symmetric_coefficients(tilde_f(f_poly(p, a1, a2 - a1, a3 - a1)), m)
    ts = satake_power_sums(eigen.a(p), p, eigen.k, m)
    w = 2 * eigen.k - 9
    total = 0
    for c, j in zip(cs, range(m, -1, -2)):
        if (m - j) % 2:
            raise ArithmeticError("parity violation in symmetrized coefficients")
        scale = p ** (((m - j) // 2) * w)
        total += c * scale * (ts[j] if j > 0 else 1)
    return total


def fourier_coeff(T, eigen):
    """Coefficient of the lift at a positive definite integral element T.

    Product over p | det(T) of local_factor; exact (an integer whenever the
    eigenvalues are integers).
    """
    if not T.is_positive():
        raise ValueError("T must be positive definite")
    total = 1
    for p, div in genus_invariants(T).items():
        total *= local_factor(p, div.exps, eigen)
    return total


# ---------------------------------------------------------------------------
# Local L-factor descriptions


def sym2_coeffs(a_p, p, k):
    """Inverse local factor of the symmetric square in u = p^{-s}:
    [1, -s1, s1, -1] with s1 = a_p^2 p^{-(2k-9)} - 1.

    Unitary normalization; rational because only even powers of the Satake
    parameter survive the symmetric-function elimination.
    """
    s1 = Fraction(a_p * a_p, p ** (2 * k - 9)) - 1
    return [Fraction(1), -s1, s1, Fraction(-1)]


def _sym3_from(a, q):
    """Inverse symmetric-cube factor from a = a_p and q = p^{2k-9}."""
    e1 = a ** 3 - 2 * q * a
    e2 = q * a ** 4 - 3 * q ** 2 * a ** 2 + 2 * q ** 3
    return [1, -e1, e2, -(q ** 3) * e1, q ** 6]


def sym3_coeffs(a_p, p, k):
    """Inverse local factor of the symmetric cube in u = p^{-s}.

    Arithmetic normalization (Satake parameters scaled by p^{(2k-9)/2}), so
    the coefficients are polynomial in a_p and p^{2k-9}.
    """
    return _sym3_from(a_p, p ** (2 * k - 9))


def local_L_factors(p, a_p, k):
    """Inverse local factors of the lift's L-functions at p.

    sym2: degree 3 (unitary); sym3: degree 4 (arithmetic); std56: the
    factored description of the degree-56 standard factor - the
    symmetric-cube factor and two blocks of shifted degree-2 factors, at
    shifts -4..4 and -8..8 (arithmetic normalization throughout, so a shift
    i rescales the degree-2 factor by powers of p^{-i}).
    """
    q = p ** (2 * k - 9)

    def deg2(i):
        sh = Fraction(p) ** (-i)
        return [Fraction(1), -a_p * sh, q * sh * sh]

    return {
        "sym2": sym2_coeffs(a_p, p, k),
        "sym3": sym3_coeffs(a_p, p, k),
        "std56": {
            "sym3": sym3_coeffs(a_p, p, k),
            "block9": [(i, deg2(i)) for i in range(-4, 5)],
            "block17": [(i, deg2(i)) for i in range(-8, 9)],
        },
    }
