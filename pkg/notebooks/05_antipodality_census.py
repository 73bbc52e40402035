# %% [markdown]
# # Antipodality census
#
# For rank at most 3 the only vertex at distance `n-r+2` from `v` is its
# antipode.  Whether this persists in higher rank is open; the census counts
# non-antipodal pairs at that distance and how many antipode candidates
# survive each stage of recognition.

# %%
import sys

from cocircuit import cyclic, random_realizable
from cocircuit.explorer import census_csv, dv_census

corpus = [cyclic(n, r) for r, n in [(3, 6), (4, 6), (4, 7), (5, 7)]]
corpus += [random_realizable(7, 4, seed) for seed in range(3)]
census_csv(dv_census(corpus), sys.stdout)
