"""Local densities and the exact mass formula.

beta_p depends only on the elementary divisor triple and is a closed-form
rational.  Three exact recursions (scaling, adjoint, last-slot step) and a
13-coefficient series identity pin it down; the global mass then comes out
as one rational number per genus.
"""

from fractions import Fraction

from heptalift import (
    JordanElement,
    MASS_CONSTANT,
    beta_exps,
    constants,
    igusa_verify,
    mass,
)

p = 2
print("delta_2 =", constants(p).delta, " c1(2) =", constants(p).c1)
for exps in ((0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)):
    print("beta_2%s = %s" % (exps, beta_exps(p, exps)))

# the three exact recursions, one instance each
b = beta_exps(p, (0, 1, 2))
assert beta_exps(p, (1, 2, 3)) == p ** 27 * b
assert beta_exps(p, (1, 3, 4)) == p ** (9 * 4) * beta_exps(p, (0, 1, 3))
assert beta_exps(p, (0, 1, 3)) == p * b
print("\nscaling, adjoint and step recursions hold")

# the series identity behind the closed form, checked through u^6
ok, rows = igusa_verify(p, 6)
print("series identity through u^6:", "ok" if ok else "FAILED")
print("  m=0 coefficient:", rows[0]["lhs"])

# the mass of the unit genus is a single small rational
one = JordanElement.diag(1, 1, 1)
m = mass(one)
print("\nmass of the unit genus =", m)
assert m == MASS_CONSTANT == Fraction(691, 2 ** 15 * 3 ** 6 * 5 ** 2 * 7 ** 2 * 13)

# scale invariance: rescaling the element does not change its mass
assert mass(JordanElement.diag(2, 2, 2)) == m
print("mass(diag(2,2,2)) equals mass(diag(1,1,1))")

# a genus with content at two primes
T = JordanElement.diag(1, 2, 20)
print("mass(diag(1,2,20)) =", mass(T))
