# %% [markdown]
# The left-regular action on PBW monomials, the printed closed forms, and quotient spaces.

# %%
from g2alg.g2core import Gen
from g2alg.pbw import format_polynomial, mono
from g2alg.reps.closed_forms import closed_rho, discrepancy_report
from g2alg.reps.master import check_invariance, quotient_catalog, quotient_weights, rho_apply

x = mono(m2=2, m6=1, n4=1, k1=1)
for g in (Gen.EM4, Gen.E6, Gen.H2):
    print(g.label, ":", format_polynomial(rho_apply(g, x)))

# %%
# the closed-form table as printed disagrees with the engine at a handful of lines
x = mono(m2=3, m3=1)
print("printed  :", format_polynomial(closed_rho(Gen.EM6, x)))
print("corrected:", format_polynomial(closed_rho(Gen.EM6, x, corrected=True)))
print("engine   :", format_polynomial(rho_apply(Gen.EM6, x)))

for entry in discrepancy_report("master", samples=50):
    print(f"{entry['location']:60s} hits={entry['hits']}")

# %%
# every listed quotient is by an invariant subspace
for space in quotient_catalog():
    sample = [mono(m1=1, n5=1), mono(n1=1, n2=1, k2=1), mono(n3=1, n6=2)]
    assert check_invariance(space.caps, sample) == []
    print(space.bosons, space.name)

# %%
# weights of the six-boson quotient up to degree 2 (the Lambda = 0 elementary representation)
from g2alg.reps.master import quotient_by_name

counts = quotient_weights(quotient_by_name("Omega/U_K1K2N15N6"), 2)
for w, n in sorted(counts.items(), key=lambda t: (float(t[0].comp1), float(t[0].comp2))):
    print(w, n)
