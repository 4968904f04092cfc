from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given

from conftest import field_elements, same_number, to_sympy
from g2alg.exactfield import ONE, R2, R3, R6, ZERO, FieldElement, parse_field, q, render

s2, s3 = sympy.sqrt(2), sympy.sqrt(3)


def test_doubling():
    h = (2 * R2).inv()
    assert h + h == R2 * q(1, 2)


def test_additive_identity():
    x = q(3, 7) + R6
    assert x + ZERO == x


def test_cancellation():
    assert (q(1, 4) - R3 * q(1, 4)) + R3 * q(1, 4) == q(1, 4)


def test_basis_product():
    assert R2 * R3 == R6


def test_inverse_pair():
    assert (2 * R2).inv() * (2 * R2) == ONE


def test_rationalized_product():
    got = (4 * R3).inv() * (2 * R3).inv()
    assert got == q(1, 24)
    assert same_number(got, 1 / (4 * s3) / (2 * s3))


def test_simple_inverses():
    assert R2.inv() == R2 * q(1, 2)
    assert ONE.inv() == ONE
    assert (1 + R2).inv() == R2 - 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_mixed_operands():
    assert Fraction(1, 2) * R2 == R2 / 2
    assert 1 - R3 == -(R3 - 1)


@given(field_elements(), field_elements(), field_elements())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z


@given(field_elements())
def test_inverse(x):
    assume(x)
    assert x * x.inv() == ONE


@given(field_elements(), field_elements())
def test_agrees_with_sympy(x, y):
    assert sympy.simplify(to_sympy(x * y) - to_sympy(x) * to_sympy(y)) == 0
    assert sympy.simplify(to_sympy(x - y) - (to_sympy(x) - to_sympy(y))) == 0


@given(field_elements())
def test_render_round_trip(x):
    assert parse_field(render(x)) == x


@given(field_elements())
def test_decimal_matches_sympy(x):
    assert abs(float(x) - float(sympy.N(to_sympy(x), 30))) < 1e-9 * (1 + abs(float(x)))


def test_render_examples():
    assert render(q(-1, 4) * R3) == "-1/4*r3"
    assert render(q(1, 8) - R6) == "1/8 - r6"
    assert render(ZERO) == "0"


@pytest.mark.parametrize("bad", ["", "1 2", "sqrt2", "1/0"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_field(bad)
