# %% [markdown]
# The highest-weight representation on lowering monomials and its twelve extremal vectors.

# %%
from g2alg.g2core import Gen
from g2alg.reps.elementary import SYMBOLIC, HighestWeight, d_lambda_apply

# Lambda stays symbolic: coefficients are polynomials in L1, L2
for g in (Gen.E6, Gen.E1, Gen.H1):
    print(g.label, d_lambda_apply(SYMBOLIC, g, (1, 0, 1, 0, 0, 1)))

# %%
from g2alg.extremal import bgg_weights, materialize_all, y61_scalar

lam = HighestWeight.from_labels(1, 1)
vectors = materialize_all(lam)
for v in vectors:
    print(f"{v.recipe.label}  {v.recipe.word(2, 2):40s} terms={len(v.vector):4d}  weight={v.weight}")

# %%
orbit = bgg_weights(lam)
print(len(orbit), "orbit weights;", "Y61 scalar =", y61_scalar(lam))
assert {v.weight for v in vectors} == {w for w, _ in orbit}
