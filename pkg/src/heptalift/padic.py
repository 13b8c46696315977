"""p-adic diagonalization of integral Jordan elements.

Every element with nonzero determinant is equivalent, over the p-adic
integers and under a structure-group word of multiplier 1, to a diagonal
element whose entries are unit multiples of p^a1, p^a2, p^a3 with
a1 <= a2 <= a3.  The ascending exponent triple is the complete local
invariant; this module computes it by explicit pivoting carried out
mod p^N: bring a coordinate of minimal valuation to the diagonal, clear
its row and column, and recurse on the complementary block.

Working mod p^N with N > ord_p(det) loses no information: the clearing
vector w = -pivot^{-1} (offdiag / p^mu) is known mod p^{N-mu} only, but
every place it enters is multiplied by an entry of valuation >= mu, so
all 27 coordinates stay correct mod p^N throughout.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .cayley import Octonion, Zmod, ZZ
from .jordan import JordanElement, apply_token


def _vp(v, p, cap):
    """Exponent of p in the integer v, or cap when v == 0."""
    v = int(v)
    if v == 0:
        return cap
    k = 0
    while v % p == 0:
        v //= p
        k += 1
        if cap is not None and k >= cap:
            return cap
    return k


@dataclass(frozen=True)
class ElemDivisors:
    """Ascending exponents (a1, a2, a3) of the diagonal form at p."""

    p: int
    exps: tuple

    def __post_init__(self):
        e = tuple(int(v) for v in self.exps)
        if len(e) != 3 or list(e) != sorted(e) or e[0] < 0:
            raise ValueError(self.exps)
        object.__setattr__(self, "exps", e)

    @property
    def total(self):
        """a1 + a2 + a3 = ord_p(det)."""
        return sum(self.exps)


@dataclass(frozen=True)
class Reduction:
    """Result of a local reduction.

    word applies to the input (mapped mod p^precision) and yields
    reduced; it uses only permutation and row-operation tokens, so its
    determinant multiplier is exactly 1.
    """

    divisors: ElemDivisors
    word: tuple
    reduced: JordanElement
    precision: int


class _Reducer:
    def __init__(self, X, p, N):
        self.p = p
        self.N = N
        self.ring = Zmod(p ** N)
        self.Y = X.map_ring(self.ring)
        self.word = []

    def push(self, token):
        self.Y = apply_token(self.Y, token)
        self.word.append(token)

    def vp(self, v):
        return _vp(v, self.p, self.N)

    def vo(self, o):
        return min(self.vp(c) for c in o.co)

    # -- pivot placement ---------------------------------------------------

    def place_pivot(self, k):
        """Move a minimal-valuation active coordinate into diagonal slot k."""
        for _ in range(4):
            Y = self.Y
            if k == 0:
                cands = [
                    ("a", self.vp(Y.a)), ("b", self.vp(Y.b)), ("c", self.vp(Y.c)),
                    ("x", self.vo(Y.x)), ("y", self.vo(Y.y)), ("z", self.vo(Y.z)),
                ]
            else:
                cands = [
                    ("b", self.vp(Y.b)), ("c", self.vp(Y.c)), ("z", self.vo(Y.z)),
                ]
            name, mu = min(cands, key=lambda t: t[1])
            if mu >= self.N:
                raise ArithmeticError("all active coordinates vanish mod p^N")
            if k == 0:
                if name == "a":
                    return mu
                if name == "b":
                    self.push(("perm", (2, 1, 3)))
                elif name == "c":
                    self.push(("perm", (3, 2, 1)))
                elif name == "x":
                    self.push(("m", self._xi(Y.a, Y.x, Y.b, mu), 2, 1))
                elif name == "y":
                    self.push(("m", self._xi(Y.a, Y.y, Y.c, mu), 3, 1))
                else:
                    # z sits at (2,3); swapping rows 1,2 moves it to (1,3)
                    self.push(("perm", (2, 1, 3)))
            else:
                if name == "b":
                    return mu
                if name == "c":
                    self.push(("perm", (1, 3, 2)))
                else:
                    self.push(("m", self._xi(Y.b, Y.z, Y.c, mu), 3, 2))
        raise ArithmeticError("pivot placement did not terminate")

    def _xi(self, d_pivot, x_off, d_other, mu):
        """xi with ord(d_pivot + Tr(x_off xi) + d_other N(xi)) == mu.

        The row operation with this xi turns the pivot diagonal entry into
        exactly that value.  Since the trace pairing is unimodular and both
        diagonal terms have valuation > mu here, a scaled basis vector
        always works; the exhaustive sweep is a safety net.
        """
        ring, p = self.ring, self.p

        def ok(xi):
            v = ring.el(d_pivot + x_off.trace_with(xi) + d_other * xi.norm())
            return self.vp(v) == mu

        for t in range(8):
            for c in range(1, p):
                xi = Octonion(ring, [c if u == t else 0 for u in range(8)])
                if ok(xi):
                    return xi
        for coords in itertools.product(range(p), repeat=8):
            if any(coords):
                xi = Octonion(ring, coords)
                if ok(xi):
                    return xi
        raise ArithmeticError("no clearing vector exists; input corrupt?")

    # -- row/column clearing -----------------------------------------------

    def clear(self, k, mu):
        ring, p = self.ring, self.p
        pm = p ** mu
        pivot = self.Y.a if k == 0 else self.Y.b
        uinv = pow(int(pivot) // pm, -1, ring.m)
        targets = (("x", 1, 2), ("y", 1, 3)) if k == 0 else (("z", 2, 3),)
        for name, i, j in targets:
            o = getattr(self.Y, name)
            if not any(o.co):
                continue
            w = Octonion(ring, [-uinv * (int(cv) // pm) for cv in o.co])
            self.push(("m", w, i, j))
            if any(getattr(self.Y, name).co):
                raise ArithmeticError("row clearing failed")

    def run(self):
        exps = []
        for k in (0, 1):
            mu = self.place_pivot(k)
            self.clear(k, mu)
            exps.append(mu)
        return exps


def reduce_at(X: JordanElement, p: int, precision=None) -> Reduction:
    """Diagonalize X over Z_p, returning divisors, word and reduced form."""
    if X.ring is not ZZ:
        raise TypeError("reduction expects integer coordinates")
    d = X.det()
    if d == 0:
        raise ValueError("determinant is zero")
    orddet = _vp(abs(d), p, None)
    N = orddet + 1 if precision is None else int(precision)
    if N <= orddet:
        raise ValueError("precision must exceed ord_p(det)")
    red = _Reducer(X, p, N)
    a1, a2 = red.run()
    Y = red.Y
    if any(any(o.co) for o in (Y.x, Y.y, Y.z)):
        raise ArithmeticError("off-diagonal residue after reduction")
    a3 = orddet - a1 - a2
    if not a1 <= a2 <= a3:
        raise ArithmeticError("pivot exponents out of order")
    if red.vp(Y.c) != a3:
        raise ArithmeticError("corner valuation disagrees with det")
    return Reduction(ElemDivisors(p, (a1, a2, a3)), tuple(red.word), Y, N)


def elementary_divisors(X: JordanElement, p: int, precision=None) -> ElemDivisors:
    return reduce_at(X, p, precision).divisors


def genus_invariants(X: JordanElement) -> dict:
    """Elementary divisors at every prime dividing det X, as {p: ElemDivisors}."""
    d = X.det()
    if d == 0:
        raise ValueError("determinant is zero")
    return {p: elementary_divisors(X, p) for p in sorted(factorize(abs(d)))}


# ---------------------------------------------------------------------------
# integer factorization (Miller-Rabin + Brent's rho); dets stay modest but
# exactness matters, so no floating point anywhere


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng) -> int:
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict:
    """Prime factorization {p: e} of n >= 1."""
    if n < 1:
        raise ValueError(n)
    out = {}
    for q in (2, 3, 5, 7, 11, 13):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    if n == 1:
        return out
    rng = random.Random(0xFAC)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = m
        while d == m:
            d = _brent_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out
