"""Local diagonalization: elementary divisors at a prime.

Over the p-adic integers every element of the Jordan algebra is equivalent,
under the determinant-preserving structure group, to diag(p^a1, p^a2, p^a3)
with a1 <= a2 <= a3.  The reducer finds that triple by explicit row
operations and returns the word it used, so the claim is replayable.
"""

import random

from heptalift import JordanElement, elementary_divisors, genus_invariants, reduce_at
from heptalift.jordan import apply_word
from heptalift.cayley import Octonion, ZZ

rng = random.Random(5)


def rand_oct():
    return Octonion(ZZ, [rng.randint(-2, 2) for _ in range(8)])


# start from a known profile and scramble it with invertible tokens
X = JordanElement.diag(1, 2, 20)
word = [("m", rand_oct(), 1, 2), ("perm", (3, 1, 2)), ("m", rand_oct(), 2, 3)]
Y = apply_word(X, word)
print("scrambled element diagonal:", (Y.a, Y.b, Y.c))
print("det =", Y.det())

r = reduce_at(Y, 2)
print("\nelementary divisors at 2:", r.divisors.exps)
print("working precision 2^%d, word length %d" % (r.precision, len(r.word)))

# the word genuinely diagonalizes: replay it on the input element mod p^N
Z = apply_word(Y.map_ring(r.reduced.ring), r.word)
assert Z.to_json() == r.reduced.to_json()
print("replaying the word reproduces the reduced form")

# the exponent sum is the p-valuation of det: here ord_2(40) = 3
assert r.divisors.total == 3
print("sum rule: a1+a2+a3 =", r.divisors.total)

# all primes at once: the genus invariant of the element
print("\ngenus invariants of diag(1,2,20):")
for p, div in genus_invariants(X).items():
    print("  p =", p, "->", div.exps)

# other primes see nothing: the element is unimodular there
print("at p = 7:", elementary_divisors(X, 7).exps)
