"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line in the terminal summary."""

import itertools
import random
from collections import Counter
from functools import lru_cache

import pytest

from g2alg.exactfield import ONE, R2, R6, ZERO
from g2alg.extremal import bgg_weights, layer_order_holds, materialize_all, y61_scalar
from g2alg.g2core import Gen, all_pairs, bracket
from g2alg.oscillator.fermion import (
    MODES,
    f_annihilate,
    f_create,
    f_identity,
    f_number,
    generated_F,
    invariant_block,
    transcribed_F,
)
from g2alg.oscillator.realizations import (
    check_equivariance,
    generated_B5,
    generated_B6,
    transcribed_B5,
    transcribed_B6,
)
from g2alg.oscillator.verify import adjudicate, verify_realization
from g2alg.pbw import multiply, poly_add, poly_sub, unit
from g2alg.reps.closed_forms import discrepancy_report
from g2alg.reps.elementary import SYMBOLIC, HighestWeight, d_lambda_apply, minus_monomials
from g2alg.reps.fundamental import build_fundamental_01
from g2alg.reps.master import check_invariance, quotient_catalog

DESCRIPTIONS = {
    1: "Jacobi on 364 triples, antisymmetry on 91 pairs",
    2: "closed-form master table agrees with the engine except the two flagged sites",
    3: "elementary representation is a homomorphism at four (p,q) and symbolically",
    4: "six-boson: generated passes symbolically, transcription differs only at flagged sites",
    5: "five-boson: generated passes, transcription differs only at flagged sites",
    6: "twelve extremal vectors, BGG orbit of 12, Y61 scalar, at five (p,q)",
    7: "fundamental (0,1): dim 7, relation constants, 91 commutators, diagonal H",
    8: "three-fermion: 91 commutators, projector identities, invariant block, itemized diff",
    9: "quotient catalog invariance and boson-count grouping",
    10: "Fock equivariance of the six-boson realization at (1,1), degree <= 4",
}


# 1 ----------------------------------------------------------------------------


def test_criterion_01_structure():
    def comm(p, r):
        return poly_sub(multiply(p, r), multiply(r, p))

    gens = {g: {unit(g): ONE} for g in Gen}
    triples = list(itertools.combinations(Gen, 3))
    assert len(triples) == 364
    for x, y, z in triples:
        X, Y, Z = gens[x], gens[y], gens[z]
        total = poly_add(comm(comm(X, Y), Z), comm(comm(Y, Z), X), comm(comm(Z, X), Y))
        assert total == {}, (x, y, z)
    pairs = all_pairs()
    assert len(pairs) == 91
    for x, y in pairs:
        assert bracket(x, y) == {g: -c for g, c in bracket(y, x).items()}


# 2 ----------------------------------------------------------------------------

# the two sites the acceptance criterion allows: the H2 k-index line of the
# master table, and the E4 sqrt2/sqrt3 coefficient (which sits in the elementary table)
ALLOWED = {("master", "H2"), ("elementary", "E4")}


def test_criterion_02_master_table_fidelity():
    master = discrepancy_report("master", samples=200, max_exp=3, seed=0)
    elementary = discrepancy_report("elementary", samples=200, max_exp=3, seed=0)
    found = [("master", e) for e in master] + [("elementary", e) for e in elementary]
    for _, e in found:
        assert e["engine_value"] != e["printed_value"]
    assert any(t == "master" and e["location"].startswith("H2:") for t, e in found), "H2 site not reported"
    extra = sorted(
        f"{table} {e['location']}" for table, e in found
        if (table, e["location"].split(":")[0]) not in ALLOWED
    )
    assert extra == [], f"discrepancies outside the flagged sites: {extra}"


# 3 ----------------------------------------------------------------------------


def _homomorphism_failures(lam):
    cache = {}

    def act(g, m):
        key = (g, m)
        if key not in cache:
            cache[key] = d_lambda_apply(lam, g, m)
        return cache[key]

    def act_poly(g, v):
        out = {}
        for m, c in v.items():
            for t, d in act(g, m).items():
                s = out.get(t, ZERO) + c * d
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    bad = []
    basis = list(minus_monomials(3))
    for x, y in all_pairs():
        br = bracket(x, y)
        for m in basis:
            v = {m: ONE}
            lhs = poly_sub(act_poly(x, act_poly(y, v)), act_poly(y, act_poly(x, v)))
            rhs = {}
            for z, c in br.items():
                rhs = poly_add(rhs, {t: c * d for t, d in act(z, m).items()})
            if poly_sub(lhs, rhs):
                bad.append((x, y, m))
    return bad


@pytest.mark.parametrize("lam", ["symbolic", (0, 0), (1, 0), (0, 1), (1, 1)], ids=str)
def test_criterion_03_homomorphism(lam):
    hw = SYMBOLIC if lam == "symbolic" else HighestWeight.from_labels(*lam)
    assert _homomorphism_failures(hw) == []


# 4 / 5 ------------------------------------------------------------------------


def test_criterion_04_six_boson():
    gen = generated_B6()
    assert verify_realization(gen).passed
    result = adjudicate(transcribed_B6(), gen, "six-boson")
    # flagged: the E4 sqrt2/sqrt3 coefficient and the E-6 a3+ a2^2 sign
    flagged = {"six-boson E4", "six-boson E-6"}
    extra = [d["location"] for d in result["discrepancies"] if d["location"] not in flagged]
    assert extra == [], f"unflagged transcription differences: {result['discrepancies']}"


def test_criterion_05_five_boson():
    gen = generated_B5()
    assert verify_realization(gen).passed
    result = adjudicate(transcribed_B5(), gen, "five-boson")
    # flagged: the E-6 a3+ a2^2 sign and the E2 number-operator coefficients
    flagged = {"five-boson E-6", "five-boson E2"}
    locations = {d["location"] for d in result["discrepancies"]}
    assert locations <= flagged
    assert "five-boson E-6" in locations
    assert result["patched_transcription_passes"]
    assert result["verifier_passing"] == "generated"


# 6 ----------------------------------------------------------------------------


@pytest.mark.parametrize("pq", [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)], ids=str)
def test_criterion_06_extremal(pq):
    lam = HighestWeight.from_labels(*pq)
    vectors = materialize_all(lam)  # raises if any d(E_i) Y is nonzero
    assert len(vectors) == 12
    orbit = bgg_weights(lam)
    assert len(orbit) == 12
    assert Counter(v.weight for v in vectors) == Counter(w for w, _ in orbit)
    assert layer_order_holds(vectors)
    assert y61_scalar(lam) == ONE


# 7 ----------------------------------------------------------------------------


def _m(**kw):
    return tuple(kw.get(f"m{i}", 0) for i in range(1, 7))


# basis element = constant * monomial, as printed in the weight-space table
PRINTED_RELATIONS = [
    (_m(m2=1), 2 * R2, _m(m1=1, m6=1)),
    (_m(m4=1), 2 * R6, _m(m2=1, m6=1)),
    (_m(m4=1, m6=1), (6 * R2).inv(), _m(m5=1)),
    (_m(m2=1, m4=1), 3 * R2, _m(m3=1)),
    (_m(m2=1, m4=1), -ONE * 2 / 3, _m(m1=1, m5=1)),
    (_m(m2=1, m4=1), 2 * R6, _m(m2=2, m6=1)),
    (_m(m2=1, m4=1), -4 * R2, _m(m1=1, m4=1, m6=1)),
    (_m(m2=1, m4=1, m6=1), -(4 * R6).inv(), _m(m4=2)),
    (_m(m2=1, m4=1, m6=1), (6 * R2).inv(), _m(m2=1, m5=1)),
    (_m(m2=1, m4=1, m6=1), (6 * R2).inv(), _m(m3=1, m6=1)),
]


def test_criterion_07_fundamental():
    rep = build_fundamental_01()
    assert rep.dim == 7
    mismatched = []
    for basis_el, const, monomial in PRINTED_RELATIONS:
        # [monomial] = r [basis] means basis = (1/r) monomial
        r = rep.relation(monomial, basis_el)
        if not r or r.inv() != const:
            mismatched.append((basis_el, monomial, str(const), str(r.inv()) if r else "0"))
    for x, y in all_pairs():
        for i in range(7):
            for j in range(7):
                lhs = sum((rep.matrices[x][i][k] * rep.matrices[y][k][j]
                           - rep.matrices[y][i][k] * rep.matrices[x][k][j] for k in range(7)), ZERO)
                rhs = sum((c * rep.matrices[z][i][j] for z, c in bracket(x, y).items()), ZERO)
                assert lhs == rhs, (x, y)
    for h in (Gen.H1, Gen.H2):
        for i in range(7):
            assert all(rep.matrices[h][i][j] == ZERO for j in range(7) if j != i)
    assert [(rep.matrices[Gen.H1][i][i], rep.matrices[Gen.H2][i][i]) for i in range(7)] == [
        (w.comp1, w.comp2) for w in rep.weights
    ]
    assert len(set(rep.weights)) == 7
    assert mismatched == [], f"relation constants differing from the printed table: {mismatched}"


# 8 ----------------------------------------------------------------------------


def test_criterion_08_three_fermion():
    F = generated_F()
    assert verify_realization(F).passed
    one = f_identity()
    for i in MODES:
        f, fd, n = f_annihilate(i), f_create(i), f_number(i)
        assert n == fd * f and n * n == n
        assert (one - n) * (one - n) == one - n
        assert f * fd * f == f and (one - n) * f == f
        assert fd * f * fd == fd and fd * (one - n) == fd
    rep = build_fundamental_01()
    for g in Gen:
        block, leaks = invariant_block(F[g])
        assert leaks == []
        assert block == rep.matrices[g]
    result = adjudicate(transcribed_F(), F, "three-fermion")
    assert isinstance(result["discrepancies"], list)
    for d in result["discrepancies"]:
        assert {"location", "printed_value", "engine_value", "difference"} <= set(d)
    assert result["generated_passes"]


# 9 ----------------------------------------------------------------------------

PRINTED_CATALOG = {
    13: ["K1", "K2", "N5", "N6"],
    12: ["K1K2", "K1N5", "K1N6", "K2N5", "K2N6", "N5N6", "N45"],
    11: ["K1K2N5", "K1K2N6", "K1N5N6", "K2N5N6", "K1N45", "K2N45", "N45N6"],
    10: ["K1K2N5N6", "K1K2N45", "K1N45N6", "K2N45N6"],
    9: ["K1K2N45N6", "N15"],
    8: ["K1N15", "K2N15", "N15N6"],
    7: ["K1K2N15", "K1N15N6", "K2N15N6"],
    6: ["K1K2N15N6"],
}


def test_criterion_09_quotients():
    cat = quotient_catalog()
    listed = {b: [s.name.split("_", 1)[1] for s in cat if s.bosons == b] for b in PRINTED_CATALOG}
    assert listed == PRINTED_CATALOG
    rng = random.Random(2024)
    for s in cat:
        assert s.caps.boson_count() == s.bosons
        sample = [tuple(rng.randint(0, 3) for _ in range(14)) for _ in range(100)]
        assert check_invariance(s.caps, sample) == [], s.name


# 10 ---------------------------------------------------------------------------


def test_criterion_10_equivariance():
    lam = HighestWeight.from_labels(1, 1)

    def action(g, m):
        return d_lambda_apply(lam, g, m)

    generated = generated_B6(lam)
    assert check_equivariance(generated, action, 6, max_degree=4) == []
    # the printed operators, with only the adjudicated E2 line swapped, intertwine as well
    patched = dict(transcribed_B6(lam))
    patched[Gen.E2] = generated[Gen.E2]
    assert check_equivariance(patched, action, 6, max_degree=4) == []


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
