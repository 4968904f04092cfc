import random

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import same_number
from g2alg.exactfield import ONE, R3, ZERO, q
from g2alg.g2core import Gen, root_of
from g2alg.params import L1, L2
from g2alg.reps.closed_forms import (
    ELEMENTARY_ERRATA,
    MASTER_ERRATA,
    closed_d_lambda,
    discrepancy_report,
)
from g2alg.reps.elementary import (
    SYMBOLIC,
    HighestWeight,
    d_I01_I12_apply,
    d_lambda_apply,
    minus_monomials,
    verma_weight,
)

E6 = (0, 0, 0, 0, 0, 1)
E3 = (0, 0, 1, 0, 0, 0)
E1 = (1, 0, 0, 0, 0, 0)
VAC = (0,) * 6
monos6 = st.tuples(*([st.integers(0, 3)] * 6))


def test_e6_on_em6():
    assert d_lambda_apply(SYMBOLIC, Gen.E6, E6) == {VAC: L2 * (2 * R3).inv()}


def test_h1_on_em3():
    assert d_lambda_apply(SYMBOLIC, Gen.H1, E3) == {E3: L1 - q(1, 2)}


@pytest.mark.parametrize("g", [Gen.E1, Gen.E2, Gen.E3, Gen.E4, Gen.E5, Gen.E6])
def test_raising_kills_vacuum(g):
    assert d_lambda_apply(SYMBOLIC, g, VAC) == {}


def test_quotient_drops_em6_on_vacuum():
    assert d_I01_I12_apply(L1, Gen.EM6, VAC) == {}
    assert d_lambda_apply(HighestWeight(L1, ZERO), Gen.EM6, VAC) == {E6: ONE}


def test_h2_on_em1_at_zero_l2():
    got = d_lambda_apply(HighestWeight(L1, ZERO), Gen.H2, E1)
    assert list(got) == [E1]
    assert got[E1] == 3 * (4 * R3).inv()
    assert same_number(got[E1], 3 / (4 * sympy.sqrt(3)))


def test_e1_on_em1_at_zero_l2():
    assert d_lambda_apply(HighestWeight(L1, ZERO), Gen.E1, E1) == {VAC: L1 * q(1, 4)}


@given(monos6)
def test_cartan_lines(m):
    m1, m2, m3, m4, m5, m6 = m
    M1 = L1 - q(1, 4) * (m1 + m2 + 2 * m3 + m4 + m5)
    M2 = L2 + (4 * R3).inv() * (3 * m1 + m2 - m4 - 3 * m5 - 2 * m6)
    assert d_lambda_apply(SYMBOLIC, Gen.H1, m) == {m: M1}
    assert d_lambda_apply(SYMBOLIC, Gen.H2, m) == {m: M2}


@given(monos6, st.sampled_from([g for g in Gen if g.is_root]), st.integers(0, 2), st.integers(0, 2))
def test_weight_additivity(m, g, p, qq):
    lam = HighestWeight.from_labels(p, qq)
    image = d_lambda_apply(lam, g, m)
    for t in image:
        assert verma_weight(lam, t) == verma_weight(lam, m) + root_of(g)


@given(monos6, st.sampled_from(list(Gen)))
def test_corrected_table_matches_engine(m, g):
    assert closed_d_lambda(SYMBOLIC, g, m, corrected=True) == d_lambda_apply(SYMBOLIC, g, m)


def test_elementary_discrepancies_are_the_recorded_sites():
    rep = discrepancy_report("elementary", samples=60, seed=1)
    locations = {e["location"] for e in rep}
    assert locations == {f"{e.gen.label}: {e.target}" for e in ELEMENTARY_ERRATA}
    assert not any("unexplained" in loc for loc in locations)


def test_master_discrepancies_are_the_recorded_sites():
    rep = discrepancy_report("master", samples=60, seed=1)
    locations = {e["location"] for e in rep}
    assert locations == {f"{e.gen.label}: {e.target}" for e in MASTER_ERRATA}
    for e in rep:
        assert e["printed_value"] != e["engine_value"]


def test_monomial_enumeration():
    assert len(list(minus_monomials(3))) == 84
    assert len(list(minus_monomials(2, 5))) == 21
