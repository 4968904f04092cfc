import pytest
import sympy

from conftest import same_number

from g2alg.exactfield import ONE, ZERO
from g2alg.g2core import Gen, half_sum_R, positive_roots, weyl_reflect
from g2alg.reps.elementary import HighestWeight
from g2alg.extremal import (
    ExtremalError,
    ExtremalRecipe,
    bgg_weights,
    extremal_recipes,
    layer_order_holds,
    layer_sum_ideal,
    materialize_all,
    materialize_extremal,
    solve_extremal,
    string_degrees,
    y61_scalar,
)

a1, a6 = positive_roots()[0], positive_roots()[5]


def recipe(label):
    return next(r for r in extremal_recipes() if r.label == label)


@pytest.mark.parametrize("pq,PQ", [((0, 1), (1, 2)), ((0, 0), (1, 1)), ((2, 3), (3, 4))])
def test_string_degrees(pq, PQ):
    assert string_degrees(*pq) == PQ


def test_string_degrees_rejects_negative():
    with pytest.raises(ValueError):
        string_degrees(-1, 0)


def test_y21_word():
    assert recipe("Y21").exponents(1, 1) == [(Gen.EM6, 4), (Gen.EM1, 1)]


def test_recipe_counts():
    rs = extremal_recipes()
    assert len(rs) == 12
    assert len(recipe("Y11").factors) == 1
    assert [r.label for r in rs] == ["Y01", "Y11", "Y12", "Y21", "Y22", "Y31", "Y32",
                                     "Y41", "Y42", "Y51", "Y52", "Y61"]


def test_exponents_positive():
    for P in range(1, 4):
        for Q in range(1, 4):
            for r in extremal_recipes():
                assert all(e > 0 for _, e in r.exponents(P, Q))


def test_y11_at_01():
    lam = HighestWeight.from_labels(0, 1)
    v = materialize_extremal(lam, recipe("Y11"))
    assert v.vector == {(1, 0, 0, 0, 0, 0): ONE}
    # Lambda = (1/4, 1/(4 sqrt3)) minus alpha1 = (1/4, -sqrt3/4) gives (0, 1/sqrt3)
    assert v.weight.comp1 == ZERO
    assert same_number(v.weight.comp2, 1 / sympy.sqrt(3))


def test_y01_trivial():
    lam = HighestWeight.from_labels(1, 2)
    v = materialize_extremal(lam, recipe("Y01"))
    assert v.vector == {(0,) * 6: ONE} and v.weight == lam.weight()


def test_y12_at_00():
    v = materialize_extremal(HighestWeight.from_labels(0, 0), recipe("Y12"))
    assert v.vector == {(0, 0, 0, 0, 0, 1): ONE}
    assert v.weight == -a6


def test_orbit():
    lam = HighestWeight.from_labels(0, 0)
    orbit = bgg_weights(lam)
    assert len(orbit) == 12
    word_of = {w: word for w, word in orbit}
    assert word_of[lam.weight()] == ()
    R = half_sum_R()
    assert weyl_reflect(a1, lam.weight() + R) - R == lam.weight() - a1


@pytest.mark.parametrize("pq", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_all_twelve(pq):
    lam = HighestWeight.from_labels(*pq)
    vs = materialize_all(lam)
    assert {v.weight for v in vs} == {w for w, _ in bgg_weights(lam)}
    assert layer_order_holds(vs)
    assert y61_scalar(lam) == ONE


def test_layer_ideal_membership():
    lam = HighestWeight.from_labels(0, 1)
    ideal = layer_sum_ideal(1, lam)
    assert ideal.contains({(1, 0, 0, 0, 0, 0): ONE})
    assert not ideal.contains({(0,) * 6: ONE})
    assert not ideal.contains({(0, 0, 0, 0, 0, 1): ONE})
    assert ideal.contains({(0, 0, 0, 0, 0, 2): ONE})


def test_solver_agrees_with_recipe():
    lam = HighestWeight.from_labels(0, 1)
    v = materialize_extremal(lam, recipe("Y21"))
    m = next(iter(v.vector))
    from g2alg.reps.elementary import simple_coords

    kernel = solve_extremal(lam, *simple_coords(m))
    assert len(kernel) == 1
    ratio = {v.vector[k] / kernel[0][k] for k in kernel[0]}
    assert len(ratio) == 1 and set(kernel[0]) == set(v.vector)


def test_bad_recipe_raises():
    lam = HighestWeight.from_labels(0, 0)
    bogus = ExtremalRecipe(1, 1, ((Gen.EM6, (1, 1)),))  # E-6^2 is not extremal at (0,0)
    with pytest.raises(ExtremalError) as info:
        materialize_extremal(lam, bogus)
    assert info.value.residual
