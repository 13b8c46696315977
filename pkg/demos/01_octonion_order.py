"""Arithmetic in the integral octonion order.

The order is carried in a fixed 8-element basis whose norm form is the E8
lattice rescaled to minimum 1: products of basis vectors expand with +-1
coefficients, every norm is a nonnegative integer, and the trace-pairing
Gram matrix is unimodular.
"""

import random

from heptalift import Octonion, ZZ, gram_det, structure_constants, trace_pairing_gram

# the multiplication table: a_1 a_2 expands back into the basis
S = structure_constants()
print("a_1 * a_2 expands with coefficients", S[1][2])

x = Octonion.basis(1)
y = Octonion.basis(2)
print("a_1 * a_2 =", x * y)
print("N(a_1) =", x.norm(), " Tr(a_1) =", x.trace())

# composition: N(xy) = N(x) N(y), exactly, for any integral pair
rng = random.Random(7)
x = Octonion(ZZ, [rng.randint(-3, 3) for _ in range(8)])
y = Octonion(ZZ, [rng.randint(-3, 3) for _ in range(8)])
print("\nrandom x =", x)
print("random y =", y)
print("N(x) N(y) =", x.norm() * y.norm(), " N(xy) =", (x * y).norm())

# alternativity: the subalgebra generated by two elements is associative
assert x * (x * y) == (x * x) * y
assert (y * x) * x == y * (x * x)
print("alternative laws hold for this pair")

# conjugation reverses products and recovers the norm
assert (x * y).conj() == y.conj() * x.conj()
assert x * x.conj() == Octonion.scalar(x.norm())
print("x conj(x) = N(x):", x * x.conj())

# the trace pairing is a unimodular integral form: this is the E8 shape
print("\ntrace-pairing Gram matrix, first row:", trace_pairing_gram()[0])
print("Gram determinant =", gram_det())
