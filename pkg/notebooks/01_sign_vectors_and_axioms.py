# %% [markdown]
# # Sign vectors and the cocircuit axioms
#
# A uniform oriented matroid of rank `r` on `n` elements is a set of sign
# vectors, the cocircuits.  Here we build one from three vectors in the plane
# and check the axioms by brute force.

# %%
from cocircuit import SignVector, from_vectors, negate, separator, support, validate_axioms

x = SignVector.parse("0++")
y = SignVector.parse("--0")
print("support", sorted(support(x)), "separator", sorted(separator(x, y)), "negation", negate(x))

# %% [markdown]
# Cocircuit signs are determinant signs: for each element `z`, the cocircuit
# with zero at `z` has entry `sign det(v_z, v_e)` at `e`.

# %%
m = from_vectors([(1, 0), (1, 1), (-1, 1)])
print(m.to_text())
print(validate_axioms(m.cocircuits, m.n, m.r).summary())

# %% [markdown]
# Dropping one cocircuit breaks the pairing of supports; the report lists the
# offending support.

# %%
broken = set(m.cocircuits) - {x}
report = validate_axioms(broken, 3, 2)
print(report.summary())
print(report.witnesses)
