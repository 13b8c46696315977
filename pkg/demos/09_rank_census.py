"""Exhaustive rank census of the Jordan algebra over F_2.

The 2^27 residue classes are enumerated with precompiled numpy tables and
counted by rank stratum in parallel.  The rank-3 count matches a closed
form, and the census independently reproduces the local density at 2 —
an end-to-end check connecting raw enumeration to the density formulas.
"""

import time

from heptalift import beta_exps, beta_from_census, census_f2
from heptalift.census import sample_rank_fractions

t0 = time.perf_counter()
counts = census_f2(threads=4)
elapsed = time.perf_counter() - t0
print("census of 2^27 elements in %.2fs:" % elapsed)
for stratum in ("rank0", "rank1", "rank2", "rank3"):
    print("  %s: %d" % (stratum, counts[stratum]))

want = 2 ** 12 * (2 - 1) * (2 ** 5 - 1) * (2 ** 9 - 1)
assert counts["rank3"] == want
print("rank3 equals the closed form 2^12 (2-1)(2^5-1)(2^9-1) =", want)

beta = beta_from_census(2, counts)
assert beta == beta_exps(2, (0, 0, 0))
print("census-derived density:", beta, "= beta_2(0,0,0)")

# at odd primes the same strata appear with the predicted frequencies
sample = sample_rank_fractions(3, samples=20000, seed=1)
print("\nsampled rank-3 fraction at p=3: %.4f (expected %.4f)"
      % (sample["rank3_fraction"], sample["rank3_expected"]))
