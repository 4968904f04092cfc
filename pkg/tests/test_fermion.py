import pytest

from g2alg.exactfield import ONE, R2, ZERO, q
from g2alg.g2core import Gen, bracket
from g2alg.oscillator.fermion import (
    KETS,
    MODES,
    SEVEN_KETS,
    correspondence_terms,
    f_annihilate,
    f_create,
    f_identity,
    f_number,
    generated_F,
    invariant_block,
    transcribed_F,
)
from g2alg.oscillator.verify import adjudicate, verify_realization
from g2alg.reps.fundamental import build_fundamental_01


@pytest.fixture(scope="module")
def F():
    return generated_F()


def test_car():
    for i in MODES:
        for j in MODES:
            acomm = f_annihilate(i).anticommutator(f_create(j))
            assert acomm == (f_identity() if i == j else f_identity() * 0)
            assert f_create(i).anticommutator(f_create(j)).is_zero()


def test_projector_identities():
    one = f_identity()
    for i in MODES:
        f, fd, n = f_annihilate(i), f_create(i), f_number(i)
        assert n * n == n
        assert (one - n) * (one - n) == one - n
        assert f * fd * f == f
        assert fd * f * fd == fd
        assert (one - n) * f == f


def test_em5(F):
    assert F[Gen.EM5] == 6 * R2 * f_create(4) * f_create(6)


def test_h1_diagonal(F):
    expected = q(1, 4) * (f_identity() - f_number(2) - f_number(4))
    assert F[Gen.H1] == expected
    for i, r in enumerate(F[Gen.H1].m):
        assert all(x == ZERO for j, x in enumerate(r) if j != i)


def test_em1(F):
    expected = (2 * R2).inv() * (f_identity() - q(1, 2) * f_number(4)) * f_create(2) * f_annihilate(6)
    assert F[Gen.EM1] == expected


def test_cartan_on_em2(F):
    assert (F[Gen.H1].commutator(F[Gen.EM2]) + q(1, 4) * F[Gen.EM2]).is_zero()


def test_generated_passes(F):
    assert verify_realization(F).passed


def test_transcription_matches(F):
    result = adjudicate(transcribed_F(), F, "three-fermion")
    assert result["discrepancies"] == []
    assert result["transcribed_passes"]


def test_invariant_block(F):
    rep = build_fundamental_01()
    for g in Gen:
        block, leaks = invariant_block(F[g])
        assert leaks == []
        assert block == rep.matrices[g]


def test_trivial_ket():
    # |1,0,1> spans the complementary one-dimensional trivial summand
    k = (1, 0, 1)
    assert k in KETS and k not in SEVEN_KETS
    for g, op in generated_F().items():
        assert all(op.entry(other, k) == ZERO for other in KETS)


def test_correspondence_rebuilds_operator(F):
    for g in Gen:
        total = f_identity() * 0
        for c, text in correspondence_terms(F[g]):
            prod = f_identity()
            for factor in text.split("*"):
                i = int(factor.strip("()1-fn+"))
                if factor.startswith("("):
                    prod = prod * (f_identity() - f_number(i))
                elif factor.startswith("n"):
                    prod = prod * f_number(i)
                elif factor.endswith("+"):
                    prod = prod * f_create(i)
                else:
                    prod = prod * f_annihilate(i)
            total = total + c * prod
        assert total == F[g], g
