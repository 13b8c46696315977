"""The 27-dimensional exceptional Jordan algebra and its determinant.

Elements are 3x3 Hermitian matrices over the octonion order: three integer
diagonal entries and three octonion off-diagonals.  The cubic determinant,
the quadratic adjoint, and the cross product drive everything downstream:
rank, positivity, local reduction, densities.
"""

import random

from heptalift import JordanElement, Octonion, ZZ
from heptalift.jordan import apply_word, word_multiplier

rng = random.Random(11)


def rand_oct():
    return Octonion(ZZ, [rng.randint(-2, 2) for _ in range(8)])


X = JordanElement(ZZ, 2, 1, 3, rand_oct(), rand_oct(), rand_oct())
print("X diagonal:", (X.a, X.b, X.c))
print("det X =", X.det())
print("adj X diagonal:", (X.adj().a, X.adj().b, X.adj().c))

# the adjoint linearizes det: (X x X, Y) is the t-coefficient of det(X + tY)
Y = JordanElement(ZZ, 1, 0, 1, rand_oct(), rand_oct(), rand_oct())
d0, d1, d2, d3 = X.det_expansion(Y)
print("\ndet(X + tY) =", d0, "+", d1, "t +", d2, "t^2 +", d3, "t^3")
assert d1 == X.adj().inner(Y)
for t in (1, 2, 3):
    assert (X + Y.scale(t)).det() == d0 + d1 * t + d2 * t ** 2 + d3 * t ** 3
print("cubic matches direct determinants at t = 1, 2, 3")

# structure-group generators rescale det by a known multiplier
word = [
    ("m", rand_oct(), 1, 3),
    ("perm", (2, 3, 1)),
    ("theta", (1, -1, 1)),
    ("gamma", -1),
]
nu = word_multiplier(word, ZZ)
Z = apply_word(X, word)
print("\nword multiplier nu =", nu)
print("det(g X) =", Z.det(), " nu det X =", nu * X.det())
assert Z.det() == nu * X.det()

# rank stratification over a residue field
from heptalift import Zmod

F5 = Zmod(5)
for diag in ((0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)):
    M = JordanElement.diag(*diag, ring=F5)
    print("diag%s rank mod 5 =" % (diag,), M.rank_mod_p())
