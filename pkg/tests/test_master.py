import random
from collections import Counter

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import same_number
from g2alg.exactfield import ONE, ZERO, q
from g2alg.g2core import Gen, Weight, structure_constant
from g2alg.pbw import IDENTITY, ideal_reduce, left_mul_poly, mono, unit
from g2alg.reps.closed_forms import closed_rho
from g2alg.reps.master import (
    check_invariance,
    induced_action,
    master_weight_action,
    quotient_by_name,
    quotient_catalog,
    quotient_weights,
    rho_apply,
)

monos14 = st.tuples(*([st.integers(0, 3)] * 14))


@given(monos14)
def test_em1_raises_m1(x):
    y = list(x)
    y[0] += 1
    assert rho_apply(Gen.EM1, x) == {tuple(y): ONE}


@given(monos14)
def test_em4_line(x):
    m2 = x[1]
    y = list(x)
    y[3] += 1
    expected = {tuple(y): ONE}
    if m2:
        z = list(x)
        z[1] -= 1
        z[2] += 1
        expected[tuple(z)] = m2 * structure_constant(-4, -2)
    assert rho_apply(Gen.EM4, x) == expected


def test_h1_on_identity():
    assert rho_apply(Gen.H1, IDENTITY) == {unit(Gen.H1): ONE}


def test_e6_on_e4():
    assert rho_apply(Gen.E6, mono(n4=1)) == {mono(n4=1, n6=1): ONE, mono(n5=1): structure_constant(6, 4)}


def test_cartan_line_uses_k2():
    # the H2 action must raise k2, not k1
    for x in (IDENTITY, mono(k1=2), mono(m3=1, k2=1)):
        y = list(x)
        y[13] += 1
        assert rho_apply(Gen.H2, x)[tuple(y)] == ONE


@given(st.sampled_from(list(Gen)), monos14)
def test_rho_is_left_multiplication(g, x):
    assert rho_apply(g, x) == left_mul_poly(g, {x: ONE})


def test_weights():
    assert master_weight_action(IDENTITY) == Weight(ZERO, ZERO)
    assert master_weight_action(mono(n3=1)) == Weight(q(1, 2), ZERO)
    w = master_weight_action(mono(m6=1))
    assert w.comp1 == ZERO and same_number(w.comp2, -1 / (2 * sympy.sqrt(3)))


@pytest.mark.parametrize(
    "name,caps,bosons",
    [
        ("Omega/U_K1K2", {"K1": 1, "K2": 1}, 12),
        ("Omega/V_N15", {"N15": 1}, 9),
        ("Omega/U_K1K2N15N6", {"K1": 1, "K2": 1, "N15": 1, "N6": 1}, 6),
    ],
)
def test_catalog_entries(name, caps, bosons):
    s = quotient_by_name(name)
    assert s.caps.caps() == caps
    assert s.bosons == bosons == s.caps.boson_count()


def test_catalog_grouping():
    cat = quotient_catalog()
    assert Counter(s.bosons for s in cat) == {13: 4, 12: 7, 11: 7, 10: 4, 9: 2, 8: 3, 7: 3, 6: 1}
    for s in cat:
        assert s.caps.boson_count() == s.bosons
        assert len(s.generators) == s.bosons
    assert len({s.name for s in cat}) == len(cat)


def test_unknown_space():
    with pytest.raises(KeyError):
        quotient_by_name("Omega/V_K3")


def test_invariance_every_space():
    rng = random.Random(7)
    for s in quotient_catalog():
        sample = [tuple(rng.randint(0, 2) for _ in range(14)) for _ in range(40)]
        assert check_invariance(s.caps, sample) == [], s.name


def test_non_invariant_cap_is_detected():
    # capping n1 alone is not invariant: E6 E1 = E1 E6 + N E2 leaves the subspace
    from g2alg.pbw import IdealSpec

    class N1Cap(IdealSpec):
        def contains(self, m):
            return m[6] >= 1

    bad = check_invariance(N1Cap(), [mono(n1=1)])
    assert bad


def test_induced_action_kills_subspace():
    spec = quotient_by_name("Omega/V_K1").caps
    assert induced_action(Gen.EM1, mono(k1=1), spec) == {}
    assert induced_action(Gen.H1, IDENTITY, spec) == {}


def test_closed_master_table_agrees_after_corrections():
    rng = random.Random(3)
    for g in Gen:
        for _ in range(25):
            x = tuple(rng.randint(0, 3) for _ in range(14))
            assert closed_rho(g, x, corrected=True) == rho_apply(g, x), (g, x)


def test_quotient_weights_origin():
    counts = quotient_weights(quotient_by_name("Omega/U_K1K2N15N6"), 2)
    assert counts[Weight(ZERO, ZERO)] == 1
    assert sum(counts.values()) == 28  # monomials of degree <= 2 in six variables
    with pytest.raises(ValueError):
        quotient_weights(quotient_by_name("Omega/V_N5"), 2)
