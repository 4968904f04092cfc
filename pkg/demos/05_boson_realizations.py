# %% [markdown]
# Six- and five-boson realizations: generated from the representation, then compared with the printed lists.

# %%
from g2alg.g2core import Gen
from g2alg.oscillator.realizations import generated_B5, generated_B6, transcribed_B5, transcribed_B6
from g2alg.oscillator.verify import adjudicate, verify_realization

B6 = generated_B6()
for g in (Gen.EM6, Gen.E1, Gen.H2):
    print(f"B({g.label}) =", B6[g])

# %%
# symbolic Lambda: one check covers every highest weight
print(verify_realization(B6).summary())

# %%
for name, printed, generated in (
    ("six-boson", transcribed_B6(), B6),
    ("five-boson", transcribed_B5(), generated_B5()),
):
    result = adjudicate(printed, generated, name)
    print(name, "printed passes:", result["transcribed_passes"],
          "| failing pairs:", result["transcribed_failing_pairs"])
    for d in result["discrepancies"]:
        print("  ", d["location"], "difference:", d["difference"])
