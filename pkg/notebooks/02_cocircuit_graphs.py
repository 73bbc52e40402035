# %% [markdown]
# # Cocircuit graphs
#
# Two cocircuits are adjacent when their zero-supports differ in two elements
# and no element carries opposite signs.  The graph is `2(r-1)`-regular with
# `2 C(n, r-1)` vertices, and each vertex sits at distance `n-r+2` from its
# negative.

# %%
from math import comb

from cocircuit import antipodal_from_labeling, apsp, build_cocircuit_graph, cyclic
from cocircuit.graphs import check_regular
from cocircuit.om import colines

for n, r in [(3, 2), (4, 3), (6, 4)]:
    g, lab = build_cocircuit_graph(cyclic(n, r))
    antipode = antipodal_from_labeling(lab)
    d = apsp(g)
    print(f"n={n} r={r}: V={g.vertex_count} (2C(n,r-1)={2 * comb(n, r - 1)}), "
          f"degree={check_regular(g)}, antipodal distances={set(int(d[v, antipode[v]]) for v in range(g.vertex_count))}")

# %% [markdown]
# Rank-2 contractions (colines) appear in the graph as cycles of length
# `2(n-r+2)`.

# %%
m = cyclic(6, 4)
for contracted, minor in colines(m)[:3]:
    g, _ = build_cocircuit_graph(minor)
    print(sorted(contracted), "->", g.vertex_count, "vertex cycle, degree", check_regular(g))
