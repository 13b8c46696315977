"""Cayley numbers (octonions) with an integral maximal order.

The multiplication table on the standard basis e_0..e_7 uses the Fano lines
{i, i+1, i+3} (indices 1..7 cyclically mod 7) with e_i e_{i+1} = e_{i+3},
each line cyclic, distinct imaginary units anticommuting and e_i^2 = -e_0.

The maximal order is spanned by

    a_0 = e_0, a_1 = e_1, a_2 = e_2, a_3 = -e_4,
    a_4 = (e_1 + e_2 + e_3 - e_4)/2,
    a_5 = (-e_0 - e_1 - e_4 + e_5)/2,
    a_6 = (-e_0 + e_1 - e_2 + e_6)/2,
    a_7 = (-e_0 + e_2 + e_4 + e_7)/2.

Elements are stored by their integer coordinates on a_0..a_7; the trace
pairing on this basis is unimodular (E8), which is checked at import, along
with closure of the order under multiplication and N(a_i) = 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# rings

class IntegerRing:
    name = "Z"

    def el(self, v):
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError("not an integer: %s" % v)
            return v.numerator
        return int(v)

    def is_unit(self, v):
        return v in (1, -1)

    def inv(self, v):
        if not self.is_unit(v):
            raise ZeroDivisionError("non-unit in Z: %s" % v)
        return v

    def __repr__(self):
        return "Z"


class RationalRing:
    name = "Q"

    def el(self, v):
        return Fraction(v)

    def is_unit(self, v):
        return v != 0

    def inv(self, v):
        return 1 / Fraction(v)

    def __repr__(self):
        return "Q"


class ModRing:
    """Z/m with representatives 0..m-1."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError(m)
        self.m = m
        self.name = "Z/%d" % m

    def el(self, v):
        if isinstance(v, Fraction):
            if gcd(v.denominator, self.m) != 1:
                raise ZeroDivisionError("denominator not invertible mod %d" % self.m)
            return v.numerator * pow(v.denominator, -1, self.m) % self.m
        return int(v) % self.m

    def is_unit(self, v):
        return gcd(int(v), self.m) == 1

    def inv(self, v):
        return pow(int(v), -1, self.m)

    def __eq__(self, other):
        return isinstance(other, ModRing) and other.m == self.m

    def __hash__(self):
        return hash(("ModRing", self.m))

    def __repr__(self):
        return self.name


ZZ = IntegerRing()
QQ = RationalRing()

_mod_cache = {}


def Zmod(m: int) -> ModRing:
    r = _mod_cache.get(m)
    if r is None:
        r = _mod_cache[m] = ModRing(m)
    return r


# ---------------------------------------------------------------------------
# e-basis multiplication table

def _build_e_table():
    """e_i * e_j = (index, sign) for i,j in 0..7."""
    pair = {}
    for i in range(1, 8):
        a, b, c = i, i % 7 + 1, (i + 2) % 7 + 1
        for (u, v, w) in ((a, b, c), (b, c, a), (c, a, b)):
            pair[(u, v)] = (w, 1)
            pair[(v, u)] = (w, -1)
    table = {}
    for i in range(8):
        for j in range(8):
            if i == 0:
                table[(i, j)] = (j, 1)
            elif j == 0:
                table[(i, j)] = (i, 1)
            elif i == j:
                table[(i, j)] = (0, -1)
            else:
                table[(i, j)] = pair[(i, j)]
    return table


_E_TABLE = _build_e_table()


def _e_mul(u, v):
    """Bilinear product of e-coordinate vectors (any scalar type)."""
    out = [0] * 8
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            k, s = _E_TABLE[(i, j)]
            out[k] += ui * vj if s > 0 else -ui * vj
    return out


# doubled e-coordinates of the order basis (rows are 2*a_i)
_ALPHA_2E = (
    (2, 0, 0, 0, 0, 0, 0, 0),
    (0, 2, 0, 0, 0, 0, 0, 0),
    (0, 0, 2, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, -2, 0, 0, 0),
    (0, 1, 1, 1, -1, 0, 0, 0),
    (-1, -1, 0, 0, -1, 1, 0, 0),
    (-1, 1, -1, 0, 0, 0, 1, 0),
    (-1, 0, 1, 0, 1, 0, 0, 1),
)


def _mat_inv_frac(m):
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _det_frac(m):
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _build_structure():
    inv = _mat_inv_frac(_ALPHA_2E)

    def to_alpha(w2):
        # coords c with c . ALPHA_2E = w2
        out = []
        for k in range(8):
            acc = Fraction(0)
            for i in range(8):
                acc += Fraction(w2[i]) * inv[i][k]
            if acc.denominator != 1:
                raise ArithmeticError("order not closed under multiplication")
            out.append(acc.numerator)
        return tuple(out)

    S = []
    for i in range(8):
        row = []
        for j in range(8):
            prod2 = _e_mul(_ALPHA_2E[i], _ALPHA_2E[j])  # = 4 a_i a_j
            if any(v % 2 for v in prod2):
                raise ArithmeticError("order not closed under multiplication")
            row.append(to_alpha([v // 2 for v in prod2]))
        S.append(tuple(row))
    return tuple(S)


_S = _build_structure()


def _build_mul_kernel():
    """Straight-line product of two coordinate vectors, generated from _S.

    Every structure constant is +-1, so each output coordinate is a signed
    sum of x_i y_j monomials; unrolling removes the interpreter loop from
    the hottest primitive in the package.
    """
    terms = [[] for _ in range(8)]
    for i in range(8):
        for j in range(8):
            for k, v in enumerate(_S[i][j]):
                if v not in (0, 1, -1):
                    raise AssertionError("structure constants are not all +-1")
                if v:
                    terms[k].append(("+" if v > 0 else "-") + "x%d*y%d" % (i, j))
    exprs = [("".join(t)).lstrip("+") for t in terms]
    args = ",".join(["x%d" % i for i in range(8)] + ["y%d" % j for j in range(8)])
    ns = {}
    exec("def mul(%s):\n    return (%s)" % (args, ",".join(exprs)), ns)
    return ns["mul"]


_MUL_RAW = _build_mul_kernel()

# trace of each basis vector: Tr(x) = x + conj(x) = 2 * (e_0 coefficient)
_TRV = tuple(row[0] for row in _ALPHA_2E)

# Gram of the trace pairing Tr(x conj(y)) = (2x) . (2y) / 2 on doubled coords
_GRAM = tuple(
    tuple(sum(a * b for a, b in zip(_ALPHA_2E[i], _ALPHA_2E[j])) // 2 for j in range(8))
    for i in range(8)
)

# Tr(x y) bilinear form: Tr(a_i a_j) picked out of the structure constants
_GRAM_NOCONJ = tuple(
    tuple(sum(_S[i][j][k] * _TRV[k] for k in range(8)) for j in range(8))
    for i in range(8)
)


def _check_tables():
    for i in range(8):
        n2 = sum(v * v for v in _ALPHA_2E[i])
        if n2 != 4:  # N(a_i) = 1 on doubled coordinates
            raise ArithmeticError("basis vector %d has norm %s" % (i, Fraction(n2, 4)))
    if _det_frac(_GRAM) != 1:
        raise ArithmeticError("trace pairing Gram determinant is not 1")


_check_tables()


def structure_constants():
    return _S


def trace_pairing_gram():
    """8x8 integer Gram matrix of (x, y) -> Tr(x conj(y)); determinant 1."""
    return _GRAM


def gram_det() -> int:
    d = _det_frac(_GRAM)
    return d.numerator


# ---------------------------------------------------------------------------
# octonions

class Octonion:
    __slots__ = ("ring", "co")

    def __init__(self, ring, coords):
        self.ring = ring
        self.co = tuple(ring.el(v) for v in coords)

    @classmethod
    def _raw(cls, ring, coords):
        """Internal: coords already canonical (Z/Q) or just need a mod reduce."""
        o = cls.__new__(cls)
        o.ring = ring
        if isinstance(ring, ModRing):
            m = ring.m
            o.co = tuple(v % m for v in coords)
        else:
            o.co = tuple(coords)
        return o

    @classmethod
    def zero(cls, ring=ZZ):
        return cls(ring, (0,) * 8)

    @classmethod
    def scalar(cls, v, ring=ZZ):
        return cls(ring, (v, 0, 0, 0, 0, 0, 0, 0))

    @classmethod
    def basis(cls, i, ring=ZZ):
        co = [0] * 8
        co[i] = 1
        return cls(ring, co)

    @classmethod
    def from_e_coords(cls, e_coords, ring=ZZ):
        """Build from ordinary e-basis coordinates (must land in the order)."""
        w2 = [2 * Fraction(v) for v in e_coords]
        inv = _mat_inv_frac(_ALPHA_2E)
        out = []
        for k in range(8):
            acc = sum(w2[i] * inv[i][k] for i in range(8))
            out.append(acc)
        return cls(ring, out)

    def e_coords_doubled(self):
        """Integer vector of 2x the e-basis coordinates."""
        out = [0] * 8
        for i, c in enumerate(self.co):
            if c:
                for j in range(8):
                    out[j] += c * _ALPHA_2E[i][j]
        return out

    def is_zero(self):
        return all(not v for v in self.co)

    def __eq__(self, other):
        return (
            isinstance(other, Octonion)
            and self.ring.name == other.ring.name
            and self.co == other.co
        )

    def __hash__(self):
        return hash((self.ring.name, self.co))

    def __add__(self, other):
        return Octonion._raw(self.ring, [a + b for a, b in zip(self.co, other.co)])

    def __sub__(self, other):
        return Octonion._raw(self.ring, [a - b for a, b in zip(self.co, other.co)])

    def __neg__(self):
        return Octonion._raw(self.ring, [-a for a in self.co])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion._raw(self.ring, _MUL_RAW(*self.co, *other.co))
        return Octonion._raw(self.ring, [v * other for v in self.co])

    def __rmul__(self, other):
        return Octonion._raw(self.ring, [other * v for v in self.co])

    def conj(self):
        t = sum(c * _TRV[i] for i, c in enumerate(self.co))
        co = [-v for v in self.co]
        co[0] = t + co[0]
        return Octonion._raw(self.ring, co)

    def trace(self):
        """Tr(x) = x + conj(x), as a ring scalar."""
        return self.ring.el(sum(c * _TRV[i] for i, c in enumerate(self.co)))

    def norm(self):
        """N(x) = x conj(x), as a ring scalar."""
        acc = 0
        co = self.co
        for i in range(8):
            ci = co[i]
            if not ci:
                continue
            acc += ci * ci * (_GRAM[i][i] // 2)
            for j in range(i + 1, 8):
                if co[j]:
                    acc += _GRAM[i][j] * ci * co[j]
        return self.ring.el(acc)

    def norm_polar(self, other):
        """Tr(x conj(y)) = N(x+y) - N(x) - N(y), as a ring scalar."""
        acc = 0
        for i, ci in enumerate(self.co):
            if not ci:
                continue
            for j, dj in enumerate(other.co):
                if dj:
                    acc += _GRAM[i][j] * ci * dj
        return self.ring.el(acc)

    def trace_with(self, other):
        """Tr(x y), as a ring scalar."""
        acc = 0
        for i, ci in enumerate(self.co):
            if not ci:
                continue
            for j, dj in enumerate(other.co):
                if dj:
                    acc += _GRAM_NOCONJ[i][j] * ci * dj
        return self.ring.el(acc)

    def map_ring(self, ring):
        return Octonion(ring, self.co)

    def to_list(self):
        return list(self.co)

    @classmethod
    def from_list(cls, coords, ring=ZZ):
        if len(coords) != 8:
            raise ValueError("octonion needs 8 coordinates")
        return cls(ring, coords)

    def __repr__(self):
        return "Octonion(%s, %s)" % (self.ring.name, list(self.co))
