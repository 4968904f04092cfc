import pytest

from g2alg.exactfield import ONE, R2, R3, R6, ZERO, q
from g2alg.g2core import Gen
from g2alg.oscillator.boson import BosonPoly, fock_apply
from g2alg.oscillator.realizations import (
    check_equivariance,
    generated_B5,
    generated_B6,
    transcribed_B5,
    transcribed_B6,
)
from g2alg.oscillator.verify import adjudicate, verify_realization
from g2alg.params import L1, L2
from g2alg.reps.elementary import HighestWeight, d_I01_I12_apply, d_lambda_apply


def cr(i, k):
    return BosonPoly.create(i, k)


def an(i, k):
    return BosonPoly.annihilate(i, k)


def nn(i, k):
    return BosonPoly.number(i, k)


@pytest.fixture(scope="module")
def b6():
    return generated_B6()


@pytest.fixture(scope="module")
def b5():
    return generated_B5()


def test_six_em1(b6):
    assert b6[Gen.EM1] == cr(1, 6)


def test_six_h1(b6):
    expected = L1 - q(1, 4) * (nn(1, 6) + nn(2, 6) + 2 * nn(3, 6) + nn(4, 6) + nn(5, 6))
    assert b6[Gen.H1] == expected


def test_six_e6_kills_vacuum(b6):
    assert fock_apply(b6[Gen.E6], (0,) * 6) == {}


def test_five_em6_sign(b5):
    k = 5
    printed = (-(2 * R2).inv() * cr(2, k) * an(1, k) - R6.inv() * cr(4, k) * an(2, k)
             - (8 * R3).inv() * cr(3, k) * an(2, k) ** 2 - (2 * R2).inv() * cr(5, k) * an(4, k))
    assert transcribed_B5()[Gen.EM6] == printed
    # the verifier-passing operator flips only the a3+ a2^2 sign
    assert b5[Gen.EM6] == printed + 2 * (8 * R3).inv() * cr(3, k) * an(2, k) ** 2


def test_five_h2(b5):
    k = 5
    assert b5[Gen.H2] == (4 * R3).inv() * (3 * nn(1, k) + nn(2, k) - nn(4, k) - 3 * nn(5, k))


def test_five_em1(b5):
    assert b5[Gen.EM1] == cr(1, 5)


def test_six_generated_passes_symbolically(b6):
    report = verify_realization(b6)
    assert report.passed and len(report.residuals) == 91


def test_five_generated_passes(b5):
    assert verify_realization(b5).passed


def test_commuting_cartans(b6):
    assert b6[Gen.H1].commutator(b6[Gen.H2]).is_zero()


def test_six_transcription_site(b6):
    result = adjudicate(transcribed_B6(), b6, "six-boson")
    assert [d["location"] for d in result["discrepancies"]] == ["six-boson E2"]
    assert result["patched_transcription_passes"] and not result["transcribed_passes"]
    # the E4 coefficient printed with sqrt3 is already the correct one
    assert (transcribed_B6()[Gen.E4] - b6[Gen.E4]).is_zero()


def test_five_transcription_sites(b5):
    result = adjudicate(transcribed_B5(), b5, "five-boson")
    assert sorted(d["location"] for d in result["discrepancies"]) == ["five-boson E-6", "five-boson E2"]
    assert result["patched_transcription_passes"]
    assert result["transcribed_failing_pairs"] == 18


def test_equivariance_numeric_point():
    lam = HighestWeight.from_labels(1, 0)
    ops = generated_B6(lam)
    assert check_equivariance(ops, lambda g, m: d_lambda_apply(lam, g, m), 6, max_degree=3) == []


def test_five_boson_equivariance():
    def action(g, m):
        return {k[:5]: c for k, c in d_I01_I12_apply(L1, g, m + (0,)).items()}

    assert check_equivariance(generated_B5(), action, 5, max_degree=3) == []


def test_symbolic_specializes():
    lam = HighestWeight.from_labels(1, 1)
    sym = generated_B6()
    num = generated_B6(lam)
    for g in Gen:
        assert sym[g].substitute(lambda c: c.evaluate(lam.l1, lam.l2) if hasattr(c, "evaluate") else c) == num[g]
