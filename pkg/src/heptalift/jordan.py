"""The exceptional Jordan algebra of 3x3 Hermitian octonion matrices.

An element is

        [ a   x   y ]
    X = [ x~  b   z ]      (~ is octonion conjugation; a, b, c scalars)
        [ y~  z~  c ]

stored as (a, b, c, x, y, z) over a common coefficient ring.  The module
provides the Jordan product, the trace inner product, the cubic determinant
    det X = abc - a N(z) - b N(y) - c N(x) + Tr((x z) y~),
the quadratic adjoint X # X with (X#X)#(X#X) = det(X) X, and the generators
of the integral structure group together with their determinant multipliers.
"""

from __future__ import annotations

from fractions import Fraction

from .cayley import ModRing, Octonion, QQ, ZZ


def _half(ring, v):
    if isinstance(ring, ModRing):
        if ring.m % 2 == 0:
            raise ZeroDivisionError("2 is not invertible mod %d" % ring.m)
        return v * pow(2, -1, ring.m) % ring.m
    if ring is ZZ or isinstance(ring, type(ZZ)):
        if isinstance(v, Fraction):
            v = ring.el(v)
        if v % 2:
            raise ArithmeticError("result is not integral")
        return v // 2
    return Fraction(v) / 2


def _half_oct(o: Octonion) -> Octonion:
    return Octonion(o.ring, [_half(o.ring, v) for v in o.co])


class JordanElement:
    __slots__ = ("ring", "a", "b", "c", "x", "y", "z")

    def __init__(self, ring, a, b, c, x, y, z):
        self.ring = ring
        self.a = ring.el(a)
        self.b = ring.el(b)
        self.c = ring.el(c)
        self.x = x if x.ring is ring else x.map_ring(ring)
        self.y = y if y.ring is ring else y.map_ring(ring)
        self.z = z if z.ring is ring else z.map_ring(ring)

    @classmethod
    def diag(cls, a, b, c, ring=ZZ):
        zero = Octonion.zero(ring)
        return cls(ring, a, b, c, zero, zero, zero)

    @classmethod
    def identity(cls, ring=ZZ):
        return cls.diag(1, 1, 1, ring)

    @classmethod
    def zero(cls, ring=ZZ):
        return cls.diag(0, 0, 0, ring)

    def coords(self):
        """All 27 ring coordinates, diagonal first."""
        return (self.a, self.b, self.c) + self.x.co + self.y.co + self.z.co

    def is_zero(self):
        return all(not v for v in self.coords())

    def __eq__(self, other):
        return (
            isinstance(other, JordanElement)
            and self.ring.name == other.ring.name
            and self.coords() == other.coords()
        )

    def __hash__(self):
        return hash((self.ring.name, self.coords()))

    def __add__(self, other):
        return JordanElement(
            self.ring,
            self.a + other.a, self.b + other.b, self.c + other.c,
            self.x + other.x, self.y + other.y, self.z + other.z,
        )

    def __sub__(self, other):
        return JordanElement(
            self.ring,
            self.a - other.a, self.b - other.b, self.c - other.c,
            self.x - other.x, self.y - other.y, self.z - other.z,
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        return JordanElement(
            self.ring,
            s * self.a, s * self.b, s * self.c,
            s * self.x, s * self.y, s * self.z,
        )

    def map_ring(self, ring):
        return JordanElement(
            ring, self.a, self.b, self.c,
            self.x.map_ring(ring), self.y.map_ring(ring), self.z.map_ring(ring),
        )

    # -- matrix-entry view ---------------------------------------------------

    def entries(self):
        """Full 3x3 octonion matrix (diagonal as scalar octonions)."""
        R = self.ring
        return [
            [Octonion.scalar(self.a, R), self.x, self.y],
            [self.x.conj(), Octonion.scalar(self.b, R), self.z],
            [self.y.conj(), self.z.conj(), Octonion.scalar(self.c, R)],
        ]

    @classmethod
    def from_entries(cls, ring, E, check=True):
        def scal(o):
            if check and any(o.co[1:]):
                raise ArithmeticError("diagonal entry is not scalar: %r" % (o,))
            return o.co[0]

        if check:
            for (i, j) in ((1, 0), (2, 0), (2, 1)):
                if E[i][j] != E[j][i].conj():
                    raise ArithmeticError("matrix is not Hermitian")
        return cls(ring, scal(E[0][0]), scal(E[1][1]), scal(E[2][2]),
                   E[0][1], E[0][2], E[1][2])

    # -- algebra operations ----------------------------------------------

    def det(self):
        a, b, c, x, y, z = self.a, self.b, self.c, self.x, self.y, self.z
        return self.ring.el(
            a * b * c - a * z.norm() - b * y.norm() - c * x.norm()
            + (x * z).norm_polar(y)
        )

    def adj(self):
        """Freudenthal adjoint X # X; integral (no division by 2)."""
        a, b, c, x, y, z = self.a, self.b, self.c, self.x, self.y, self.z
        return JordanElement(
            self.ring,
            b * c - z.norm(),
            a * c - y.norm(),
            a * b - x.norm(),
            y * z.conj() - c * x,
            x * z - b * y,
            x.conj() * y - a * z,
        )

    def circ(self, other):
        """Jordan product (XY + YX)/2."""
        E, F = self.entries(), other.entries()
        M = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                acc = E[i][0] * F[0][j]
                acc = acc + E[i][1] * F[1][j]
                acc = acc + E[i][2] * F[2][j]
                M[i][j] = acc
        # X Y + Y X = M + M^(conj-transpose) for Hermitian X, Y
        S = [[M[i][j] + M[j][i].conj() for j in range(3)] for i in range(3)]
        H = [[_half_oct(S[i][j]) for j in range(3)] for i in range(3)]
        return JordanElement.from_entries(self.ring, H)

    def inner(self, other):
        """Trace form (X, Y) = Tr(X o Y), computed division-free."""
        return self.ring.el(
            self.a * other.a + self.b * other.b + self.c * other.c
            + self.x.norm_polar(other.x)
            + self.y.norm_polar(other.y)
            + self.z.norm_polar(other.z)
        )

    def cross(self, other):
        """Symmetric bilinear cross product X # Y (polarized adjoint)."""
        d = (self + other).adj() - self.adj() - other.adj()
        return JordanElement(
            self.ring,
            _half(self.ring, d.a), _half(self.ring, d.b), _half(self.ring, d.c),
            _half_oct(d.x), _half_oct(d.y), _half_oct(d.z),
        )

    def det_expansion(self, other):
        """Coefficients [d0, d1, d2, d3] of det(X + t Y)."""
        return [
            self.det(),
            self.adj().inner(other),
            other.adj().inner(self),
            other.det(),
        ]

    def trace(self):
        return self.ring.el(self.a + self.b + self.c)

    def is_positive(self):
        """Membership in the open positivity cone (over Z or Q)."""
        if isinstance(self.ring, ModRing):
            raise TypeError("positivity needs an ordered ring")
        return (
            self.a > 0
            and self.a * self.b - self.x.norm() > 0
            and self.det() > 0
        )

    def rank_mod_p(self):
        """Rank stratum over a prime field: 0, 1, 2 or 3."""
        if self.is_zero():
            return 0
        if self.det():
            return 3
        if self.adj().is_zero():
            return 1
        return 2

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return {
            "diag": [self.a, self.b, self.c],
            "x": self.x.to_list(),
            "y": self.y.to_list(),
            "z": self.z.to_list(),
        }

    @classmethod
    def from_json(cls, d, ring=ZZ):
        a, b, c = d["diag"]
        return cls(
            ring, a, b, c,
            Octonion.from_list(d["x"], ring),
            Octonion.from_list(d["y"], ring),
            Octonion.from_list(d["z"], ring),
        )

    def __repr__(self):
        return "JordanElement(%s, diag=%r, x=%r, y=%r, z=%r)" % (
            self.ring.name, [self.a, self.b, self.c],
            list(self.x.co), list(self.y.co), list(self.z.co),
        )


# ---------------------------------------------------------------------------
# integral structure group generators
#
# Tokens:
#   ("gamma", eps)            diag scaling (eps, eps, 1/eps); multiplier eps
#   ("m", w, i, j)            X -> (1 + w~ e_ji) X (1 + w e_ij); multiplier 1
#   ("theta", (r1, r2, r3))   entry (i,j) scaled by r_i r_j; multiplier (r1 r2 r3)^2
#   ("perm", (s1, s2, s3))    simultaneous row/column permutation; multiplier 1


def apply_gamma(X: JordanElement, eps) -> JordanElement:
    R = X.ring
    ei = R.inv(R.el(eps))
    return JordanElement(R, eps * X.a, eps * X.b, ei * X.c, eps * X.x, X.y, X.z)


def apply_m(X: JordanElement, w: Octonion, i: int, j: int) -> JordanElement:
    """X -> (1 + w~ e_ji) X (1 + w e_ij), 1-indexed positions, i != j.

    Only row j and column j change; the (j,j) entry becomes
    X_jj + Tr(X_ji w) + X_ii N(w).
    """
    if i == j or not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError((i, j))
    r, s = i - 1, j - 1
    E = X.entries()
    wc = w.conj()
    new = [row[:] for row in E]
    for t in range(3):
        new[t][s] = new[t][s] + E[t][r] * w
    for t in range(3):
        add = wc * E[r][t]
        if t == s:
            add = add + wc * (E[r][r] * w)
        new[s][t] = new[s][t] + add
    return JordanElement.from_entries(X.ring, new)


def apply_theta(X: JordanElement, r1, r2, r3) -> JordanElement:
    R = X.ring
    for r in (r1, r2, r3):
        if not R.is_unit(R.el(r)):
            raise ZeroDivisionError("theta scale is not a unit: %r" % (r,))
    return JordanElement(
        R,
        r1 * r1 * X.a, r2 * r2 * X.b, r3 * r3 * X.c,
        r1 * r2 * X.x, r1 * r3 * X.y, r2 * r3 * X.z,
    )


def apply_perm(X: JordanElement, sigma) -> JordanElement:
    """Simultaneous row/column permutation; sigma is a tuple image of (1,2,3)."""
    if sorted(sigma) != [1, 2, 3]:
        raise ValueError(sigma)
    E = X.entries()
    new = [[E[sigma[i] - 1][sigma[j] - 1] for j in range(3)] for i in range(3)]
    return JordanElement.from_entries(X.ring, new)


def apply_token(X: JordanElement, token) -> JordanElement:
    kind = token[0]
    if kind == "gamma":
        return apply_gamma(X, token[1])
    if kind == "m":
        return apply_m(X, token[1], token[2], token[3])
    if kind == "theta":
        return apply_theta(X, *token[1])
    if kind == "perm":
        return apply_perm(X, token[1])
    raise ValueError(token)


def apply_word(X: JordanElement, word) -> JordanElement:
    for token in word:
        X = apply_token(X, token)
    return X


def word_multiplier(word, ring=ZZ):
    """Product of the det multipliers of the word's tokens."""
    nu = ring.el(1)
    for token in word:
        kind = token[0]
        if kind == "gamma":
            nu = ring.el(nu * token[1])
        elif kind == "theta":
            r1, r2, r3 = token[1]
            nu = ring.el(nu * (r1 * r2 * r3) ** 2)
        elif kind in ("m", "perm"):
            pass
        else:
            raise ValueError(token)
    return nu
