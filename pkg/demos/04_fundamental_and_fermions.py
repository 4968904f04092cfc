# %% [markdown]
# The seven-dimensional (0,1) representation and the three-fermion realization built from it.

# %%
from g2alg.exactfield import render
from g2alg.g2core import Gen
from g2alg.pbw import format_monomial
from g2alg.reps.elementary import to_full
from g2alg.reps.fundamental import build_fundamental_01

rep = build_fundamental_01()
print("dimension", rep.dim)
for b, w in zip(rep.basis, rep.weights):
    print(f"{format_monomial(to_full(b)):14s} {w}")

# %%
# [E-1 E-6] in terms of [E-2], and [E-3] in terms of [E-2 E-4]
print(render(rep.relation((1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 0))))
print(render(rep.relation((0, 0, 1, 0, 0, 0), (0, 1, 0, 1, 0, 0))))

# %%
from g2alg.oscillator.fermion import correspondence_terms, generated_F, transcribed_F
from g2alg.oscillator.verify import adjudicate, verify_realization

F = generated_F(rep)
for c, text in correspondence_terms(F[Gen.EM2]):
    print(f"  {render(c):>10s}  {text}")
print(verify_realization(F).summary())
print(adjudicate(transcribed_F(), F, "three-fermion")["discrepancies"])
