import itertools
import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import field_elements, same_number
from g2alg.exactfield import ONE, R3, ZERO, q
from g2alg.g2core import (
    Gen,
    Weight,
    all_pairs,
    bracket,
    dynkin_to_weight,
    gen_of_root,
    half_sum_R,
    inner_product,
    pairing,
    parse_gen,
    positive_roots,
    root_of,
    structure_constant,
    weyl_reflect,
)

s3 = sympy.sqrt(3)
a = positive_roots()


def test_alpha3():
    assert a[2] == Weight(q(1, 2), ZERO)


def test_alpha6():
    assert a[5].comp1 == ZERO
    assert same_number(a[5].comp2, 1 / (2 * s3))


def test_alpha1_plus_alpha6_is_alpha2():
    assert a[0] + a[5] == a[1]
    assert same_number(a[1].comp2, -1 / (4 * s3))


def test_lengths():
    assert inner_product(a[2], a[2]) == q(1, 4)
    assert inner_product(a[5], a[5]) == q(1, 12)
    assert inner_product(a[2], a[2]) / inner_product(a[5], a[5]) == 3


def test_n61():
    got = bracket(Gen.E6, Gen.E1)
    assert list(got) == [Gen.E2]
    assert same_number(got[Gen.E2], 1 / (2 * sympy.sqrt(2)))
    assert got[Gen.E2] == structure_constant(6, 1)


def test_cartan_on_root():
    assert bracket(Gen.H1, Gen.E3) == {Gen.E3: q(1, 2)}


def test_e1_em1():
    assert bracket(Gen.E1, Gen.EM1) == {Gen.H1: q(1, 4), Gen.H2: -R3 * q(1, 4)}


def test_e1_e3_vanishes():
    assert bracket(Gen.E1, Gen.E3) == {}
    assert gen_of_root(a[0] + a[2]) is None


def test_reflection_of_root():
    assert weyl_reflect(a[0], a[0]) == -a[0]


@given(field_elements(), field_elements(), st.integers(0, 5))
def test_reflection_is_involution(x, y, i):
    v = Weight(x, y)
    assert weyl_reflect(a[i], weyl_reflect(a[i], v)) == v


@given(field_elements(), field_elements(), field_elements(), field_elements(), st.integers(0, 5))
def test_reflection_is_isometry(x1, y1, x2, y2, i):
    u, v = Weight(x1, y1), Weight(x2, y2)
    assert inner_product(weyl_reflect(a[i], u), weyl_reflect(a[i], v)) == inner_product(u, v)


def test_shifted_reflection_at_zero():
    R = half_sum_R()
    got = weyl_reflect(a[0], R) - R
    assert got == -a[0]
    assert got == Weight(q(-1, 4), R3 * q(1, 4))


def test_half_sum():
    R = half_sum_R()
    assert R.comp1 == q(3, 4)
    assert same_number(R.comp2, 1 / (4 * s3))
    assert pairing(R, a[0]) == ONE
    assert pairing(R, a[5]) == ONE


def test_dynkin_to_weight():
    lam = dynkin_to_weight(0, 1)
    assert lam.comp1 == q(1, 4)
    assert same_number(lam.comp2, 1 / (4 * s3))
    assert dynkin_to_weight(0, 0) == Weight(ZERO, ZERO)
    w = dynkin_to_weight(1, 0)
    assert (pairing(w, a[0]), pairing(w, a[5])) == (ONE, ZERO)


def test_antisymmetry():
    for x, y in itertools.product(Gen, repeat=2):
        xy = bracket(x, y)
        yx = bracket(y, x)
        assert xy == {g: -c for g, c in yx.items()}


def test_root_sum_closure():
    for x, y in all_pairs():
        if x.is_cartan or y.is_cartan:
            continue
        s = root_of(x) + root_of(y)
        if bracket(x, y):
            assert s.is_zero() or gen_of_root(s) is not None


def _br_lin(p, z):
    out = {}
    for g, c in p.items():
        for h, d in bracket(g, z).items():
            out[h] = out.get(h, ZERO) + c * d
    return {g: c for g, c in out.items() if c}


def test_jacobi_all_triples():
    count = 0
    for x, y, z in itertools.combinations(Gen, 3):
        total = {}
        for p in (_br_lin(bracket(x, y), z), _br_lin(bracket(y, z), x), _br_lin(bracket(z, x), y)):
            for g, c in p.items():
                total[g] = total.get(g, ZERO) + c
        assert not any(total.values()), (x, y, z)
        count += 1
    assert count == 364


def test_parse_gen():
    assert parse_gen("E-3") is Gen.EM3
    assert parse_gen("e+2") is Gen.E2
    assert parse_gen("H2") is Gen.H2
    with pytest.raises(ValueError):
        parse_gen("E7")
