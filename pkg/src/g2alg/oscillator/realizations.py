"""Six- and five-boson realizations: generated from d_Lambda, and transcribed fixtures.

The generated variant inverts the Fock correspondence X^-(m) <-> |m>: for each
ket taken in order of increasing degree, whatever part of d(g)|m> is not yet
produced must come from a new term with annihilation part exactly a^m.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from ..exactfield import ONE, R2, R3, R6, ZERO, q
from ..g2core import Gen
from ..params import L1, L2
from ..reps.elementary import HighestWeight, SYMBOLIC, d_I01_I12_apply, d_lambda_apply, minus_monomials
from .boson import BosonPoly, fock_apply

__all__ = [
    "generate_realization",
    "generated_B6",
    "generated_B5",
    "transcribed_B6",
    "transcribed_B5",
    "realization_B6",
    "realization_B5",
    "check_equivariance",
    "B5_ERRATA",
]


def _kets(modes: int, max_degree: int):
    return [m[:modes] for m in minus_monomials(max_degree, modes)]


def _fact(m) -> int:
    out = 1
    for e in m:
        out *= factorial(e)
    return out


def generate_realization(action, modes: int, fit_degree: int = 5, check_degree: int = 6) -> BosonPoly:
    """Boson polynomial B with B|m> = action(m) for all kets, fitted up to ``fit_degree``.

    ``action`` maps a ket tuple to {ket: coefficient}.  The fit is confirmed on
    every ket up to ``check_degree``; a mismatch raises ArithmeticError.
    """
    op = BosonPoly(modes)
    for m in _kets(modes, fit_degree):
        target = action(m)
        got = fock_apply(op, m)
        new = {}
        for t in set(target) | set(got):
            r = target.get(t, ZERO) - got.get(t, ZERO)
            if r:
                key = tuple((ti, mi) for ti, mi in zip(t, m))
                new[key] = r * q(1, _fact(m))
        if new:
            op = op + BosonPoly(modes, new)
    for m in _kets(modes, check_degree):
        target = action(m)
        got = fock_apply(op, m)
        if any((target.get(t, ZERO) - got.get(t, ZERO)) for t in set(target) | set(got)):
            raise ArithmeticError(f"fitted operator fails on ket {m}; raise fit_degree")
    return op


def _lam_key(lam: HighestWeight):
    return (str(lam.l1), str(lam.l2))


_B6_CACHE: dict = {}
_B5_CACHE: dict = {}


def generated_B6(lam: HighestWeight = SYMBOLIC) -> dict:
    key = _lam_key(lam)
    if key not in _B6_CACHE:
        _B6_CACHE[key] = {
            g: generate_realization(lambda m, g=g: d_lambda_apply(lam, g, m), 6) for g in Gen
        }
    return _B6_CACHE[key]


def generated_B5(l1=L1) -> dict:
    key = str(l1)
    if key not in _B5_CACHE:
        lam = HighestWeight(l1, ZERO)

        def action(g, m):
            return {k[:5]: c for k, c in d_I01_I12_apply(lam, g, m + (0,)).items()}

        _B5_CACHE[key] = {g: generate_realization(lambda m, g=g: action(g, m), 5) for g in Gen}
    return _B5_CACHE[key]


def _ops(modes: int):
    ad = {i: BosonPoly.create(i, modes) for i in range(1, modes + 1)}
    a = {i: BosonPoly.annihilate(i, modes) for i in range(1, modes + 1)}
    n = {i: BosonPoly.number(i, modes) for i in range(1, modes + 1)}
    return ad, a, n


def _inv(x):
    return x.inv()


HALF = q(1, 2)


def transcribed_B6(lam: HighestWeight = SYMBOLIC) -> dict:
    """The six-boson operators exactly as printed."""
    ad, a, n = _ops(6)
    l1, l2 = lam.l1, lam.l2
    one = BosonPoly.constant(ONE, 6)
    s2, s3, s6 = R2, R3, R6

    def lam6():
        return l2 * one - _inv(4 * s3) * n[6]

    return {
        Gen.EM1: ad[1],
        Gen.EM2: ad[2],
        Gen.EM3: ad[3],
        Gen.EM4: ad[4] - _inv(2 * s2) * ad[3] * a[2],
        Gen.EM5: ad[5] + _inv(2 * s2) * ad[3] * a[1],
        Gen.EM6: ad[6] - _inv(2 * s2) * ad[2] * a[1] - _inv(s6) * ad[4] * a[2]
        + _inv(8 * s3) * ad[3] * a[2] ** 2 - _inv(2 * s2) * ad[5] * a[4],
        Gen.E1: q(1, 4) * (l1 * one - s3 * l2 * one - HALF * (n[1] + n[2] + n[3] - n[5] - n[6])) * a[1]
        + _inv(2 * s2) * ad[6] * a[2] - _inv(8 * s3) * ad[4] * a[2] ** 2
        + _inv(48 * s6) * ad[3] * a[2] ** 3 - q(1, 8) * ad[5] * a[2] * a[4] - _inv(2 * s2) * ad[5] * a[3],
        Gen.E2: -_inv(4 * s3) * ad[2] * a[1] * a[4] + _inv(16 * s6) * ad[3] * a[1] * a[4] ** 2
        - q(1, 8) * ad[4] * a[1] * a[5] + _inv(4 * s6) * lam6() * a[1] * a[6]
        + q(1, 4) * (l1 * one - _inv(s3) * l2 * one
                     - _inv(4 * s3) * (3 * n[1] + n[2] + 3 * n[3] + n[4] - n[6])) * a[2]
        + _inv(2 * s2) * ad[4] * a[3] + _inv(s6) * ad[6] * a[4] - _inv(8 * s3) * ad[5] * a[4] ** 2,
        Gen.E3: _inv(16 * s6) * ad[2] * a[1] * a[4] ** 2 - _inv(96 * s3) * ad[3] * a[1] * a[4] ** 3
        - _inv(16 * s3) * lam6() * a[1] * a[4] * a[6]
        - _inv(8 * s2) * (l1 * one + s3 * l2 * one - HALF * (n[4] + n[5] + n[6])) * a[1] * a[5]
        - _inv(48 * s6) * ad[1] * a[2] ** 3
        + _inv(8 * s2) * (l1 * one + _inv(s3) * l2 * one - q(1, 6) * (2 * n[2] + n[4] + 3 * n[5] + n[6])) * a[2] * a[4]
        + q(1, 8) * ad[6] * a[2] * a[5] + q(1, 192) * ad[3] * a[2] ** 2 * a[4] ** 2
        - _inv(16 * s6) * ad[4] * a[2] ** 2 * a[5] + q(1, 48) * lam6() * a[2] ** 2 * a[6]
        + HALF * (l1 * one - q(1, 4) * (n[1] + n[2] + n[3] + n[4] + n[5])) * a[3]
        - _inv(8 * s3) * ad[6] * a[4] ** 2 + _inv(48 * s6) * ad[5] * a[4] ** 3,
        Gen.E4: -_inv(8 * s3) * ad[1] * a[2] ** 2 + _inv(24 * s2) * ad[3] * a[2] * a[4] ** 2
        - _inv(4 * s3) * ad[4] * a[2] * a[5] + _inv(6 * s2) * lam6() * a[2] * a[6]
        - _inv(2 * s2) * ad[2] * a[3] + _inv(2 * s2) * ad[6] * a[5]
        + q(1, 4) * (l1 * one + _inv(s3) * l2 * one - q(1, 6) * (4 * n[2] + n[4] + 3 * n[5] + n[6])) * a[4],
        Gen.E5: _inv(2 * s2) * ad[1] * a[3] - _inv(8 * s3) * ad[2] * a[4] ** 2
        + _inv(24 * s6) * ad[3] * a[4] ** 3 + _inv(4 * s6) * lam6() * a[4] * a[6]
        + (q(1, 4) * l1 * one + s3 * q(1, 4) * l2 * one - q(1, 8) * (n[4] + n[5] + n[6])) * a[5],
        Gen.E6: -_inv(2 * s2) * ad[1] * a[2] - _inv(s6) * ad[2] * a[4] - _inv(2 * s2) * ad[4] * a[5]
        + _inv(8 * s3) * ad[3] * a[4] ** 2 + _inv(2 * s3) * lam6() * a[6],
        Gen.H1: l1 * one - q(1, 4) * (n[1] + n[2] + 2 * n[3] + n[4] + n[5]),
        Gen.H2: l2 * one + _inv(4 * s3) * (3 * n[1] + n[2] - n[4] - 3 * n[5] - 2 * n[6]),
    }


def transcribed_B5(l1=L1) -> dict:
    """The five-boson operators exactly as printed (Lambda2 = 0)."""
    ad, a, n = _ops(5)
    one = BosonPoly.constant(ONE, 5)
    s2, s3, s6 = R2, R3, R6
    return {
        Gen.EM1: ad[1],
        Gen.EM2: ad[2],
        Gen.EM3: ad[3],
        Gen.EM4: ad[4] - _inv(2 * s2) * ad[3] * a[2],
        Gen.EM5: ad[5] + _inv(2 * s2) * ad[3] * a[1],
        Gen.EM6: -_inv(2 * s2) * ad[2] * a[1] - _inv(s6) * ad[4] * a[2]
        - _inv(8 * s3) * ad[3] * a[2] ** 2 - _inv(2 * s2) * ad[5] * a[4],
        Gen.E1: _inv(48 * s6) * ad[3] * a[2] ** 3 - _inv(8 * s3) * ad[4] * a[2] ** 2
        - q(1, 8) * ad[5] * a[2] * a[4] - _inv(2 * s2) * ad[5] * a[3]
        + q(1, 4) * (l1 * one - HALF * (n[1] + n[2] + n[3] - n[5])) * a[1],
        Gen.E2: _inv(2 * s2) * ad[4] * a[3] + _inv(16 * s6) * ad[3] * a[1] * a[4] ** 2
        - _inv(4 * s3) * ad[2] * a[1] * a[4] - q(1, 8) * ad[4] * a[1] * a[5]
        + q(1, 4) * (l1 * one - q(1, 6) * (3 * n[1] + 2 * n[2] + 3 * n[3] + n[4])) * a[2]
        - _inv(8 * s3) * ad[5] * a[4] ** 2,
        Gen.E3: -_inv(48 * s6) * ad[1] * a[2] ** 3
        + _inv(8 * s2) * (l1 * one - q(1, 6) * (2 * n[2] + n[4] + 3 * n[5])) * a[2] * a[4]
        - _inv(16 * s6) * ad[4] * a[2] ** 2 * a[5] + q(1, 192) * ad[3] * a[2] ** 2 * a[4] ** 2
        + HALF * (l1 * one - q(1, 4) * (n[1] + n[2] + n[3] + n[4] + n[5])) * a[3]
        + _inv(48 * s6) * ad[5] * a[4] ** 3 + _inv(16 * s6) * ad[2] * a[1] * a[4] ** 2
        - _inv(96 * s3) * ad[3] * a[1] * a[4] ** 3
        - _inv(8 * s2) * (l1 * one - HALF * (n[4] + n[5])) * a[1] * a[5],
        Gen.E4: -_inv(8 * s3) * ad[1] * a[2] ** 2 + _inv(24 * s2) * ad[3] * a[2] * a[4] ** 2
        - _inv(4 * s3) * ad[4] * a[2] * a[5] - _inv(2 * s2) * ad[2] * a[3]
        + q(1, 4) * (l1 * one - q(1, 6) * (4 * n[2] + n[4] + 3 * n[5])) * a[4],
        Gen.E5: _inv(2 * s2) * ad[1] * a[3] - _inv(8 * s3) * ad[2] * a[4] ** 2
        + _inv(24 * s6) * ad[3] * a[4] ** 3 + q(1, 4) * (l1 * one - HALF * (n[4] + n[5])) * a[5],
        Gen.E6: -_inv(2 * s2) * ad[1] * a[2] - _inv(s6) * ad[2] * a[4] - _inv(2 * s2) * ad[4] * a[5]
        + _inv(8 * s3) * ad[3] * a[4] ** 2,
        Gen.H1: l1 * one - q(1, 4) * (n[1] + n[2] + 2 * n[3] + n[4] + n[5]),
        Gen.H2: _inv(4 * s3) * (3 * n[1] + n[2] - n[4] - 3 * n[5]),
    }


B5_ERRATA = {}


def realization_B6(lam: HighestWeight, g: Gen, variant: str = "generated") -> BosonPoly:
    table = generated_B6(lam) if variant == "generated" else transcribed_B6(lam)
    return table[Gen(g)]


def realization_B5(l1, g: Gen, variant: str = "generated") -> BosonPoly:
    table = generated_B5(l1) if variant == "generated" else transcribed_B5(l1)
    return table[Gen(g)]


def check_equivariance(ops: dict, action, modes: int, max_degree: int = 4) -> list:
    """(g, ket) pairs where B(g)|m> differs from the image of d(g) X^-(m)."""
    bad = []
    for m in _kets(modes, max_degree):
        for g in Gen:
            target = action(g, m)
            got = fock_apply(ops[g], m)
            if any((target.get(t, ZERO) - got.get(t, ZERO)) for t in set(target) | set(got)):
                bad.append((g, m))
    return bad
