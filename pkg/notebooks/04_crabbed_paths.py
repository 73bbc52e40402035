# %% [markdown]
# # Crabbed connectivity
#
# A path is crabbed for endpoints `X, Y` when every vertex label has its
# positive part inside `X+ | Y+` and negative part inside `X- | Y-`.  In a
# cocircuit graph the number of vertex-disjoint crabbed `v,w`-paths equals
# `|L0(v) - L0(w)|`; we check this with unit-capacity max flow.

# %%
from collections import Counter
from itertools import combinations

from cocircuit import build_cocircuit_graph, count_disjoint_crabbed_paths, cyclic
from cocircuit.labeling import expected_crabbed_paths

g, lab = build_cocircuit_graph(cyclic(6, 4))
tally = Counter()
for v, w in combinations(range(g.vertex_count), 2):
    found = count_disjoint_crabbed_paths(g, lab, v, w)
    tally[(found, found == expected_crabbed_paths(lab, v, w))] += 1
print(sorted(tally.items()))
