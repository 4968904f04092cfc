# %% [markdown]
# Roots, brackets and normal ordering in the enveloping algebra.

# %%
from g2alg.exactfield import render
from g2alg.g2core import Gen, bracket, half_sum_R, inner_product, positive_roots
from g2alg.pbw import GeneratorWord, format_polynomial, normal_order, parse_word

for i, r in enumerate(positive_roots(), start=1):
    print(f"alpha{i} = ({render(r.comp1)}, {render(r.comp2)})  length^2 = {render(inner_product(r, r))}")
print("R =", half_sum_R())

# %%
# a few brackets; coefficients live in Q(sqrt2, sqrt3)
for x, y in [(Gen.E1, Gen.EM1), (Gen.E6, Gen.E1), (Gen.EM6, Gen.EM1)]:
    print(f"[{x.label}, {y.label}] =", {g.label: render(c) for g, c in bracket(x, y).items()})

# %%
# pushing raising operators to the right
w = parse_word("E6*E2^2*E-1")
print(w, "=", format_polynomial(normal_order(w)))

# %%
# the fast engine and the adjacent-swap reference agree
w = GeneratorWord.of((Gen.EM6, 2), Gen.EM1, Gen.E1)
assert normal_order(w) == normal_order(w, method="bubble")
print(format_polynomial(normal_order(w)))
