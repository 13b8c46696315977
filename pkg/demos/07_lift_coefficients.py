"""Fourier coefficients of the degree-3 lift of an elliptic eigenform.

The builtin eigenvalue table comes from the eta^24 q-expansion (weight 12,
level 1).  The coefficient at an element T factors over the primes dividing
det T, each local factor an integer built from tilde-f and the eigenvalue:
the diag(1,1,n) slice reproduces the eigenform's own coefficients.
"""

from heptalift import JordanElement, eigen_delta, fourier_coeff, local_factor, tau_table

taus = tau_table(20)
print("eigenvalues a(1..8):", taus[:8])
assert taus[0] == 1 and taus[5] == taus[1] * taus[2]

eigen = eigen_delta(50)
print("\nlift coefficients on diag(1,1,n):")
for n in range(1, 9):
    a = fourier_coeff(JordanElement.diag(1, 1, n), eigen)
    print("  a(diag(1,1,%d)) = %d   (eigenform a(%d) = %d)" % (n, a, n, taus[n - 1]))
    assert a == taus[n - 1]

# coefficients depend only on the divisor profile, and factor over primes
a36 = fourier_coeff(JordanElement.diag(1, 1, 36), eigen)
assert a36 == local_factor(2, (0, 0, 2), eigen) * local_factor(3, (0, 0, 2), eigen)
print("\na(diag(1,1,36)) = %d splits over p = 2, 3" % a36)

# a profile with a genuinely three-dimensional divisor triple
a = fourier_coeff(JordanElement.diag(2, 2, 2), eigen)
print("a(diag(2,2,2)) = %d  (profile (1,1,1) at 2)" % a)

# the Hecke tower: a(p^{m+1}) = a_p a(p^m) - p^11 a(p^{m-1})
p = 2
tower = [fourier_coeff(JordanElement.diag(1, 1, p ** m), eigen) for m in range(5)]
for m in range(1, 4):
    assert tower[m + 1] == eigen.a(p) * tower[m] - p ** 11 * tower[m - 1]
print("Hecke recurrence holds along diag(1,1,2^m)")
