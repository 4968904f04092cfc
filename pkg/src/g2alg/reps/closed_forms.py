"""Published closed-form matrix elements, transcribed verbatim as fixtures.

Two tables are kept here:

* ``MASTER`` gives rho(g) X(m, n, k) on the full PBW basis;
* ``ELEMENTARY`` gives d_Lambda(g) X^-(m) on Omega_-.

Each entry is a list of :class:`Term` objects ``coef(v) * X_shifted``.  The
transcription is literal, including apparent misprints; ``MASTER_ERRATA``
and ``ELEMENTARY_ERRATA`` hold replacement terms that the rewriting engine
has shown to be needed.  Nothing in the library treats these tables as
authoritative; they exist to be compared against the engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..exactfield import ONE, R2, R3, R6, ZERO, FieldElement, q
from ..g2core import Gen, inner_product, root_of, structure_constant

__all__ = [
    "Term",
    "Erratum",
    "Vars",
    "MASTER",
    "MASTER_ERRATA",
    "ELEMENTARY",
    "ELEMENTARY_ERRATA",
    "evaluate_terms",
    "closed_rho",
    "closed_d_lambda",
    "discrepancy_report",
]

_NAMES = ("m1", "m2", "m3", "m4", "m5", "m6", "n1", "n2", "n3", "n4", "n5", "n6", "k1", "k2")


@dataclass(frozen=True)
class Term:
    coef: Callable
    shift: dict
    text: str = ""


@dataclass(frozen=True)
class Erratum:
    gen: Gen
    target: str  # label of the literal term it replaces; "" appends a missing term
    replacement: Term | None
    note: str


class Vars:
    """Exponent and highest-weight bindings seen by the coefficient lambdas."""

    __slots__ = _NAMES + ("L1", "L2")

    def __init__(self, exps, l1=ZERO, l2=ZERO):
        exps = tuple(exps) + (0,) * (14 - len(exps))
        for name, e in zip(_NAMES, exps):
            setattr(self, name, e)
        self.L1 = l1
        self.L2 = l2

    def n(self, i: int) -> int:
        return getattr(self, f"n{i}")

    def m(self, i: int) -> int:
        return getattr(self, f"m{i}")


def T(coef, text: str = "", **shift) -> Term:
    return Term(coef, shift, text)


def N(a: int, b: int) -> FieldElement:
    return structure_constant(a, b)


def ip(a: int, b: int) -> FieldElement:
    """(alpha_a, alpha_b) for signed indices."""
    return inner_product(root_of(Gen.root(a)), root_of(Gen.root(b)))


def al(i: int, j: int) -> FieldElement:
    """alpha_i^{(j)}."""
    return root_of(Gen.root(i))[j - 1]


def inv(x) -> FieldElement:
    return FieldElement.coerce(1) / x if not isinstance(x, FieldElement) else x.inv()


HALF = q(1, 2)


def _sum_n(a: int, v: Vars):
    """sum_i (alpha_a, alpha_i) n_i."""
    total = ZERO
    for i in range(1, 7):
        total = total + ip(a, i) * v.n(i)
    return total


def _sum_m(a: int, v: Vars, lo: int, hi: int = 6):
    """sum_{i=lo}^{hi} (alpha_a, -alpha_i) m_i."""
    total = ZERO
    for i in range(lo, hi + 1):
        total = total + ip(a, -i) * v.m(i)
    return total


def _self(a: int, m: int):
    """1/2 (alpha_a, -alpha_a)(m - 1)."""
    return HALF * ip(a, -a) * (m - 1)


# ---------------------------------------------------------------------------
# rho on the full PBW basis
# ---------------------------------------------------------------------------

MASTER: dict[Gen, list[Term]] = {
    Gen.EM1: [T(lambda v: ONE, m1=1)],
    Gen.EM2: [T(lambda v: ONE, m2=1)],
    Gen.EM3: [T(lambda v: ONE, m3=1)],
    Gen.EM4: [
        T(lambda v: ONE, m4=1),
        T(lambda v: v.m2 * N(-4, -2), m2=-1, m3=1),
    ],
    Gen.EM5: [
        T(lambda v: ONE, m5=1),
        T(lambda v: v.m1 * N(-5, -1), m1=-1, m3=1),
    ],
    Gen.EM6: [
        T(lambda v: ONE, m6=1),
        T(lambda v: v.m1 * N(-6, -1), m1=-1, m2=1),
        T(lambda v: v.m2 * N(-6, -2), m2=-1, m4=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * N(-6, -2) * N(-4, -2), "1/2 m2(m2-1) X_{m2-1,m3+1}", m2=-1, m3=1),
        T(lambda v: v.m4 * N(-6, -4), m4=-1, m5=1),
    ],
    Gen.E1: [
        T(lambda v: ONE, n1=1),
        T(lambda v: v.m1 * (_self(1, v.m1) + _sum_m(1, v, 2) + _sum_n(1, v)), m1=-1),
        T(lambda v: v.m1 * al(1, 1), m1=-1, k1=1),
        T(lambda v: v.m1 * al(1, 2), m1=-1, k2=1),
        T(lambda v: v.m2 * N(1, -2), m2=-1, m6=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * N(1, -2) * N(-6, -2), m2=-2, m4=1),
        T(lambda v: q(1, 6) * v.m2 * (v.m2 - 1) * (v.m2 - 2) * N(1, -2) * N(-6, -2) * N(-4, -2),
          "1/6 m2(m2-1)(m2-2) X_{m2-2,m3+1}", m2=-2, m3=1),
        T(lambda v: v.m2 * v.m4 * N(1, -2) * N(-6, -4), m2=-1, m4=-1, m5=1),
        T(lambda v: v.m3 * N(1, -3), m3=-1, m5=1),
    ],
    Gen.E2: [
        T(lambda v: ONE, n2=1),
        T(lambda v: v.m2 * (v.m1 * N(2, -1) * N(6, -2) + _self(2, v.m2) + _sum_m(2, v, 3) + _sum_n(2, v)), m2=-1),
        T(lambda v: v.m1 * N(2, -1), m1=-1, n6=1),
        T(lambda v: v.m1 * v.m4 * N(2, -1) * N(6, -4), m1=-1, m2=1, m4=-1),
        T(lambda v: HALF * v.m1 * v.m4 * (v.m4 - 1) * N(2, -1) * N(6, -4) * N(-4, -2), m1=-1, m3=1, m4=-2),
        T(lambda v: v.m1 * v.m5 * N(2, -1) * N(6, -5), m1=-1, m4=1, m5=-1),
        T(lambda v: v.m1 * v.m6 * N(2, -1) * (_self(6, v.m6) + _sum_n(6, v)), m1=-1, m6=-1),
        T(lambda v: v.m1 * v.m6 * N(2, -1) * al(6, 1), m1=-1, m6=-1, k1=1),
        T(lambda v: v.m1 * v.m6 * N(2, -1) * al(6, 2), m1=-1, m6=-1, k2=1),
        T(lambda v: v.m1 * v.n1 * N(2, -1) * N(6, 1), m1=-1, n1=-1, n2=1),
        T(lambda v: v.m1 * v.n2 * N(2, -1) * N(6, 2), m1=-1, n2=-1, n4=1),
        T(lambda v: HALF * v.m1 * v.n2 * (v.n2 - 1) * N(2, -1) * N(6, 2) * N(4, 2), m1=-1, n2=-2, n3=1),
        T(lambda v: v.m1 * v.n4 * N(2, -1) * N(6, 4), m1=-1, n4=-1, n5=1),
        T(lambda v: v.m2 * al(2, 1), m2=-1, k1=1),
        T(lambda v: v.m2 * al(2, 2), m2=-1, k2=1),
        T(lambda v: v.m3 * N(2, -3), m3=-1, m4=1),
        T(lambda v: v.m4 * N(2, -4), m4=-1, m6=1),
        T(lambda v: HALF * v.m4 * (v.m4 - 1) * N(2, -4) * N(-6, -4), m4=-2, m5=1),
        T(lambda v: v.m6 * N(2, -6), m6=-1, n1=1),
    ],
    Gen.E3: [
        T(lambda v: ONE, n3=1),
        T(lambda v: v.m1 * N(3, -1), m1=-1, n5=1),
        T(lambda v: v.m1 * v.m3 * N(3, -1) * N(5, -3), m3=-1),
        T(lambda v: v.m1 * v.m4 * N(3, -1) * N(5, -4), m1=-1, m4=-1, n6=1),
        T(lambda v: HALF * v.m1 * v.m4 * (v.m4 - 1) * N(3, -1) * N(5, -4) * N(6, -4), m1=-1, m2=1, m4=-2),
        T(lambda v: q(1, 3) * v.m1 * v.m4 * (v.m4 - 1) * (v.m4 - 2) * N(3, -1) * N(5, -4) * N(6, -4) * N(-4, -2),
          m1=-1, m3=1, m4=-3),
        T(lambda v: v.m1 * v.m4 * v.m5 * N(3, -1) * N(5, -4) * N(6, -5), m1=-1, m5=-1),
        T(lambda v: v.m1 * v.m4 * v.m6 * N(3, -1) * N(5, -4) * (_self(6, v.m6) + _sum_n(6, v)), m1=-1, m4=-1, m6=-1),
        T(lambda v: v.m1 * v.m4 * v.m6 * N(3, -1) * N(5, -4) * al(6, 1), m1=-1, m4=-1, m6=-1, k1=1),
        T(lambda v: v.m1 * v.m4 * v.m6 * N(3, -1) * N(5, -4) * al(6, 2), m1=-1, m4=-1, m6=-1, k2=1),
        T(lambda v: v.m1 * v.m4 * v.n1 * N(3, -1) * N(5, -4) * N(6, 1), m1=-1, m4=-1, n1=-1, n2=1),
        T(lambda v: v.m1 * v.m4 * v.n2 * N(3, -1) * N(5, -4) * N(6, 2), m1=-1, m4=-1, n2=-1, n4=1),
        T(lambda v: HALF * v.m1 * v.m4 * v.n2 * (v.n2 - 1) * N(3, -1) * N(5, -4) * N(6, 2) * N(4, 2),
          m1=-1, m4=-1, n2=-2, n3=1),
        T(lambda v: v.m1 * v.m4 * v.n4 * N(3, -1) * N(5, -4) * N(6, 4), m1=-1, m4=-1, n4=-1, n5=1),
        T(lambda v: v.m1 * v.m5 * N(3, -1) * (_self(5, v.m5) + ip(5, -6) * v.m6 + _sum_n(5, v)), m1=-1, m5=-1),
        T(lambda v: v.m1 * v.m5 * N(3, -1) * al(5, 1), m1=-1, m5=-1, k1=1),
        T(lambda v: v.m1 * v.m5 * N(3, -1) * al(5, 2), m1=-1, m5=-1, k2=1),
        T(lambda v: v.m1 * v.m6 * N(3, -1) * N(5, -6), m1=-1, m6=-1, n4=1),
        T(lambda v: HALF * v.m1 * v.m6 * (v.m6 - 1) * N(3, -1) * N(5, -6) * N(4, -6), m1=-1, m6=-2, n2=1),
        T(lambda v: q(1, 6) * v.m1 * v.m6 * (v.m6 - 1) * (v.m6 - 2) * N(3, -1) * N(5, -6) * N(4, -6) * N(2, -6),
          m1=-1, m6=-3, n1=1),
        T(lambda v: v.m1 * v.m6 * v.n2 * N(3, -1) * N(5, -6) * N(4, 2), m1=-1, m6=-1, n2=-1, n3=1),
        T(lambda v: v.m1 * v.n1 * N(3, -1) * N(5, 1), m1=-1, n1=-1, n3=1),
        T(lambda v: v.m2 * N(3, -2), m2=-1, n4=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * N(3, -2) * N(4, -2), m2=-2, n6=1),
        T(lambda v: q(1, 6) * v.m2 * (v.m2 - 1) * (v.m2 - 2) * N(3, -2) * N(4, -2) * N(6, -2), m1=1, m2=-3),
        T(lambda v: v.m2 * v.m3 * N(3, -2) * N(4, -3), m3=-1),
        T(lambda v: v.m2 * v.m4 * N(3, -2) * (_self(4, v.m4) + _sum_m(4, v, 5) + _sum_n(4, v)), m2=-1, m4=-1),
        T(lambda v: v.m2 * v.m4 * N(3, -2) * al(4, 1), m2=-1, m4=-1, k1=1),
        T(lambda v: v.m2 * v.m4 * N(3, -2) * al(4, 2), m2=-1, m4=-1, k2=1),
        T(lambda v: v.m2 * v.m5 * N(3, -2) * N(4, -5), m2=-1, m5=-1, m6=1),
        T(lambda v: v.m2 * v.m6 * N(3, -2) * N(4, -6), m2=-1, m6=-1, n2=1),
        T(lambda v: HALF * v.m2 * v.m6 * (v.m6 - 1) * N(3, -2) * N(4, -6) * N(2, -6), m2=-1, m6=-2, n1=1),
        T(lambda v: v.m2 * v.n2 * N(3, -2) * N(4, 2), m2=-1, n2=-1, n3=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.m4 * N(3, -2) * N(4, -2) * N(6, -4), m2=-1, m4=-1),
        T(lambda v: q(1, 4) * v.m2 * (v.m2 - 1) * v.m4 * (v.m4 - 1) * N(3, -2) * N(4, -2) * N(6, -4) * N(-4, -2),
          m2=-2, m3=1, m4=-2),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.m5 * N(3, -2) * N(4, -2) * N(6, -5), m2=-2, m4=1, m5=-1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.m6 * (_self(6, v.m6) + _sum_n(6, v)),
          "1/2 m2(m2-1) m6 [...] X_{m2-2,m6-1} (no N factors)", m2=-2, m6=-1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.m6 * N(3, -2) * N(4, -2) * al(6, 1), m2=-2, m6=-1, k1=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.m6 * N(3, -2) * N(4, -2) * al(6, 2), m2=-2, m6=-1, k2=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.n1 * N(3, -2) * N(4, -2) * N(6, 1), m2=-2, n1=-1, n2=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.n2 * N(3, -2) * N(4, -2) * N(6, 2), m2=-2, n2=-1, n4=1),
        T(lambda v: q(1, 4) * v.m2 * (v.m2 - 1) * v.n2 * (v.n2 - 1) * N(3, -2) * N(4, -2) * N(6, 2) * N(4, 2),
          m2=-2, n2=-2, n3=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.n4 * N(3, -2) * N(4, -2) * N(6, 4), m2=-2, n4=-1, n5=1),
        T(lambda v: v.m3 * (_self(3, v.m3) + _sum_m(3, v, 4) + _sum_n(3, v)), m3=-1),
        T(lambda v: v.m3 * al(3, 1), m3=-1, k1=1),
        T(lambda v: v.m3 * al(3, 2), m3=-1, k2=1),
        T(lambda v: v.m4 * N(3, -4), m4=-1, n2=1),
        T(lambda v: HALF * v.m4 * (v.m4 - 1) * N(3, -4) * N(2, -4), m4=-2, m6=1),
        T(lambda v: q(1, 6) * v.m4 * (v.m4 - 1) * (v.m4 - 2) * N(3, -4) * N(2, -4) * N(-6, -4),
          "1/6 m4(m4-1)(m4-2) X_{m4-2,m5+1}", m4=-2, m5=1),
        T(lambda v: v.m4 * v.m6 * N(3, -4) * N(2, -6), m4=-1, m6=-1, n1=1),
        T(lambda v: v.m5 * N(3, -5), m5=-1, n1=1),
    ],
    Gen.E4: [
        T(lambda v: ONE, n4=1),
        T(lambda v: v.m2 * N(4, -2), m2=-1, n6=1),
        T(lambda v: HALF * v.m2 * (v.m2 - 1) * N(4, -2) * N(6, -2), m1=1, m2=-2),
        T(lambda v: v.m2 * v.m4 * N(4, -2) * N(6, -4), m4=-1),
        T(lambda v: HALF * v.m2 * v.m4 * (v.m4 - 1) * N(4, -2) * N(6, -4) * N(-4, -2), m2=-1, m3=1, m4=-2),
        T(lambda v: v.m2 * v.m5 * N(4, -2) * N(6, -5), m2=-1, m4=1, m5=-1),
        T(lambda v: v.m2 * v.m6 * N(4, -2) * (_self(6, v.m6) + _sum_n(6, v)), m2=-1, m6=-1),
        T(lambda v: v.m2 * v.m6 * N(4, -2) * al(6, 1), m2=-1, m6=-1, k1=1),
        T(lambda v: v.m2 * v.m6 * N(4, -2) * al(6, 2), m2=-1, m6=-1, k2=1),
        T(lambda v: v.m2 * v.n1 * N(4, -2) * N(6, 1), m2=-1, n1=-1, n2=1),
        T(lambda v: v.m2 * v.n2 * N(4, -2) * N(6, 2), m2=-1, n2=-1, n4=1),
        T(lambda v: HALF * v.m2 * v.n2 * (v.n2 - 1) * N(4, -2) * N(6, 2) * N(4, 2), m2=-1, n2=-2, n3=1),
        T(lambda v: v.m2 * v.n4 * N(4, -2) * N(6, 4), m2=-1, n4=-1, n5=1),
        T(lambda v: v.m3 * N(4, -3), m2=1, m3=-1),
        T(lambda v: v.m4 * (_self(4, v.m4) + _sum_m(4, v, 5) + _sum_n(4, v)), m4=-1),
        T(lambda v: v.m4 * al(4, 1), m4=-1, k1=1),
        T(lambda v: v.m4 * al(4, 2), m4=-1, k2=1),
        T(lambda v: v.m5 * N(4, -5), m5=-1, m6=1),
        T(lambda v: v.m6 * N(4, -6), m6=-1, n2=1),
        T(lambda v: HALF * v.m6 * (v.m6 - 1) * N(4, -6) * N(2, -6), m6=-2, n1=1),
        T(lambda v: v.n2 * N(4, 2), n2=-1, n3=1),
    ],
    Gen.E5: [
        T(lambda v: ONE, n5=1),
        T(lambda v: v.m3 * N(5, -3), m1=1, m3=-1),
        T(lambda v: v.m4 * N(5, -4), m4=-1, n6=1),
        T(lambda v: HALF * v.m4 * (v.m4 - 1) * N(5, -4) * N(6, -4), m2=1, m4=-2),
        T(lambda v: q(1, 3) * v.m4 * (v.m4 - 1) * (v.m4 - 2) * N(5, -4) * N(6, -4) * N(-4, -2), m3=1, m4=-3),
        T(lambda v: v.m4 * v.m5 * N(5, -4) * N(6, -5), m5=-1),
        # the summation sign is printed in front of both summands
        T(lambda v: v.m4 * v.m6 * N(5, -4) * HALF * (6 * ip(6, -6) * (v.m6 - 1) + _sum_n(6, v)),
          "m4 m6 N [1/2 sum_i (a6,-a6)(m6-1) + (a6,ai) n_i]", m4=-1, m6=-1),
        T(lambda v: v.m4 * v.m6 * N(5, -4) * al(6, 1), m4=-1, m6=-1, k1=1),
        T(lambda v: v.m4 * v.m6 * N(5, -4) * al(6, 2), m4=-1, m6=-1, k2=1),
        T(lambda v: v.m4 * v.n1 * N(5, -4) * N(6, 1), m4=-1, n1=-1, n2=1),
        T(lambda v: v.m4 * v.n2 * N(5, -4) * N(6, 2), m4=-1, n2=-1, n4=1),
        T(lambda v: HALF * v.m4 * v.n2 * (v.n2 - 1) * N(5, -4) * N(6, 2) * N(4, 2), m4=-1, n2=-2, n3=1),
        T(lambda v: v.m4 * v.n4 * N(5, -4) * N(6, 4), m4=-1, n4=-1, n5=1),
        T(lambda v: v.m5 * (_self(5, v.m5) + ip(5, -6) * v.m6 + _sum_n(5, v)), m5=-1),
        T(lambda v: v.m5 * al(5, 1), m5=-1, k1=1),
        T(lambda v: v.m5 * al(5, 2), m5=-1, k2=1),
        T(lambda v: v.m6 * N(5, -6), m6=-1, n4=1),
        T(lambda v: HALF * v.m6 * (v.m6 - 1) * N(5, -6) * N(4, -6), m6=-2, n2=1),
        T(lambda v: q(1, 6) * v.m6 * (v.m6 - 1) * (v.m6 - 2) * N(5, -6) * N(4, -6) * N(2, -6), m6=-3, n1=1),
        T(lambda v: v.m6 * v.n2 * N(5, -6) * N(4, 2), m6=-1, n2=-1, n3=1),
        T(lambda v: v.n1 * N(5, 1), n1=-1, n3=1),
    ],
    Gen.E6: [
        T(lambda v: ONE, n6=1),
        T(lambda v: v.m2 * N(6, -2), m1=1, m2=-1),
        T(lambda v: v.m4 * N(6, -4), m2=1, m4=-1),
        T(lambda v: HALF * v.m4 * (v.m4 - 1) * N(6, -4) * N(-4, -2), m3=1, m4=-2),
        T(lambda v: v.m5 * N(6, -5), m4=1, m5=-1),
        T(lambda v: v.m6 * (_self(6, v.m6) + _sum_n(6, v)), m6=-1),
        T(lambda v: v.m6 * al(6, 1), m6=-1, k1=1),
        T(lambda v: v.m6 * al(6, 2), m6=-1, k2=1),
        T(lambda v: v.n1 * N(6, 1), n1=-1, n2=1),
        T(lambda v: v.n2 * N(6, 2), n2=-1, n4=1),
        T(lambda v: HALF * v.n2 * (v.n2 - 1) * N(6, 2) * N(4, 2), n2=-2, n3=1),
        T(lambda v: v.n4 * N(6, 4), n4=-1, n5=1),
    ],
    Gen.H1: [
        T(lambda v: ONE, k1=1),
        T(lambda v: sum((al(i, 1) * (v.n(i) - v.m(i)) for i in range(1, 7)), ZERO)),
    ],
    Gen.H2: [
        T(lambda v: ONE, "X_{k1+1}", k1=1),
        T(lambda v: sum((al(i, 2) * (v.n(i) - v.m(i)) for i in range(1, 7)), ZERO)),
    ],
}


MASTER_ERRATA: list[Erratum] = [
    Erratum(Gen.EM6, "1/2 m2(m2-1) X_{m2-1,m3+1}", T(lambda v: HALF * v.m2 * (v.m2 - 1) * N(-6, -2) * N(-4, -2), m2=-2, m3=1),
            "two E-2 factors are consumed: shift m2-2, not m2-1"),
    Erratum(Gen.E1, "1/6 m2(m2-1)(m2-2) X_{m2-2,m3+1}", T(lambda v: q(1, 6) * v.m2 * (v.m2 - 1) * (v.m2 - 2) * N(1, -2) * N(-6, -2) * N(-4, -2),
                         m2=-3, m3=1),
            "three E-2 factors are consumed: shift m2-3, not m2-2"),
    Erratum(Gen.E3, "1/2 m2(m2-1) m6 [...] X_{m2-2,m6-1} (no N factors)", T(lambda v: HALF * v.m2 * (v.m2 - 1) * v.m6 * N(3, -2) * N(4, -2) * (_self(6, v.m6) + _sum_n(6, v)),
                          m2=-2, m6=-1),
            "the factor N_{3,-2} N_{4,-2} is missing"),
    Erratum(Gen.E3, "1/6 m4(m4-1)(m4-2) X_{m4-2,m5+1}", T(lambda v: q(1, 6) * v.m4 * (v.m4 - 1) * (v.m4 - 2) * N(3, -4) * N(2, -4) * N(-6, -4),
                          m4=-3, m5=1),
            "three E-4 factors are consumed: shift m4-3, not m4-2"),
    Erratum(Gen.E5, "m4 m6 N [1/2 sum_i (a6,-a6)(m6-1) + (a6,ai) n_i]", T(lambda v: v.m4 * v.m6 * N(5, -4) * (_self(6, v.m6) + _sum_n(6, v)), m4=-1, m6=-1),
            "summation sign misplaced; the bracket matches the other E6-type brackets"),
    Erratum(Gen.H2, "X_{k1+1}", T(lambda v: ONE, k2=1), "H2 raises k2, not k1"),
]


# ---------------------------------------------------------------------------
# d_Lambda on Omega_-
# ---------------------------------------------------------------------------

def _lam6(v: Vars):
    """Lambda2 - (m6 - 1)/(4 sqrt3)."""
    return v.L2 - inv(4 * R3) * (v.m6 - 1)


ELEMENTARY: dict[Gen, list[Term]] = {
    Gen.EM1: [T(lambda v: ONE, m1=1)],
    Gen.EM2: [T(lambda v: ONE, m2=1)],
    Gen.EM3: [T(lambda v: ONE, m3=1)],
    Gen.EM4: [
        T(lambda v: ONE, m4=1),
        T(lambda v: -inv(2 * R2) * v.m2, m2=-1, m3=1),
    ],
    Gen.EM5: [
        T(lambda v: ONE, m5=1),
        T(lambda v: inv(2 * R2) * v.m1, m1=-1, m3=1),
    ],
    Gen.EM6: [
        T(lambda v: ONE, m6=1),
        T(lambda v: -inv(2 * R2) * v.m1, m1=-1, m2=1),
        T(lambda v: -inv(R6) * v.m2, m2=-1, m4=1),
        T(lambda v: inv(8 * R3) * v.m2 * (v.m2 - 1), m2=-2, m3=1),
        T(lambda v: -inv(2 * R2) * v.m4, m4=-1, m5=1),
    ],
    Gen.E1: [
        T(lambda v: q(1, 4) * v.m1 * (v.L1 - R3 * v.L2 - HALF * (v.m1 - 1 + v.m2 + v.m3 - v.m5 - v.m6)), m1=-1),
        T(lambda v: inv(2 * R2) * v.m2, m2=-1, m6=1),
        T(lambda v: -inv(8 * R3) * v.m2 * (v.m2 - 1), m2=-2, m4=1),
        T(lambda v: inv(48 * R6) * v.m2 * (v.m2 - 1) * (v.m2 - 2), m2=-3, m3=1),
        T(lambda v: -q(1, 8) * v.m2 * v.m4, m2=-1, m4=-1, m5=1),
        T(lambda v: -inv(2 * R2) * v.m3, m3=-1, m5=1),
    ],
    Gen.E2: [
        T(lambda v: -inv(4 * R3) * v.m1 * v.m4, m1=-1, m2=1, m4=-1),
        T(lambda v: inv(16 * R6) * v.m1 * v.m4 * (v.m4 - 1), m1=-1, m3=1, m4=-2),
        T(lambda v: -q(1, 8) * v.m1 * v.m5, m1=-1, m4=1, m5=-1),
        T(lambda v: inv(4 * R6) * v.m1 * v.m6 * _lam6(v), m1=-1, m6=-1),
        T(lambda v: q(1, 4) * v.m2 * (v.L1 - inv(R3) * v.L2
                                      - inv(4 * R3) * (3 * v.m1 + v.m2 - 1 + 3 * v.m3 + v.m4 - v.m6)),
          "1/4 m2 [L1 - L2/sqrt3 - 1/(4 sqrt3)(3m1+m2-1+3m3+m4-m6)]", m2=-1),
        T(lambda v: inv(2 * R2) * v.m3, m3=-1, m4=1),
        T(lambda v: inv(R6) * v.m4, m4=-1, m6=1),
        T(lambda v: -inv(8 * R3) * v.m4 * (v.m4 - 1), m4=-2, m5=1),
    ],
    Gen.E3: [
        T(lambda v: inv(16 * R6) * v.m1 * v.m4 * (v.m4 - 1), m1=-1, m2=1, m4=-2),
        T(lambda v: -inv(96 * R3) * v.m1 * v.m4 * (v.m4 - 1) * (v.m4 - 2), m1=-1, m3=1, m4=-3),
        T(lambda v: -inv(16 * R3) * v.m1 * v.m4 * v.m6 * _lam6(v), m1=-1, m4=-1, m6=-1),
        T(lambda v: -inv(8 * R2) * v.m1 * v.m5 * (v.L1 + R3 * v.L2 - HALF * (v.m4 + v.m5 - 1 + v.m6)),
          m1=-1, m5=-1),
        T(lambda v: -inv(48 * R6) * v.m2 * (v.m2 - 1) * (v.m2 - 2), m1=1, m2=-3),
        T(lambda v: inv(8 * R2) * v.m2 * v.m4 * (v.L1 + inv(R3) * v.L2
                                                 - q(1, 6) * (2 * v.m2 + v.m4 - 3 + 3 * v.m5 + v.m6)),
          m2=-1, m4=-1),
        T(lambda v: q(1, 8) * v.m2 * v.m5, m2=-1, m5=-1, m6=1),
        T(lambda v: q(1, 192) * v.m2 * (v.m2 - 1) * v.m4 * (v.m4 - 1), m2=-2, m3=1, m4=-2),
        T(lambda v: -inv(16 * R6) * v.m2 * (v.m2 - 1) * v.m5, m2=-2, m4=1, m5=-1),
        T(lambda v: q(1, 48) * v.m2 * (v.m2 - 1) * v.m6 * _lam6(v), m2=-2, m6=-1),
        T(lambda v: HALF * v.m3 * (v.L1 - q(1, 4) * (v.m1 + v.m2 + v.m3 - 1 + v.m4 + v.m5)), m3=-1),
        T(lambda v: -inv(8 * R3) * v.m4 * (v.m4 - 1), m4=-2, m6=1),
        T(lambda v: inv(48 * R6) * v.m4 * (v.m4 - 1) * (v.m4 - 2), m4=-3, m5=1),
    ],
    Gen.E4: [
        T(lambda v: -inv(8 * R3) * v.m2 * (v.m2 - 1), m1=1, m2=-2),
        T(lambda v: inv(24 * R2) * v.m2 * v.m4 * (v.m4 - 1), m2=-1, m3=1, m4=-2),
        T(lambda v: -inv(4 * R3) * v.m2 * v.m5, m2=-1, m4=1, m5=-1),
        T(lambda v: inv(6 * R2) * v.m2 * v.m6 * (v.L2 - inv(4 * R2) * (v.m6 - 1)),
          "1/(6 sqrt2) m2 m6 (L2 - (m6-1)/(4 sqrt2))", m2=-1, m6=-1),
        T(lambda v: -inv(2 * R2) * v.m3, m2=1, m3=-1),
        T(lambda v: inv(2 * R2) * v.m5, m5=-1, m6=1),
        T(lambda v: q(1, 4) * v.m4 * (v.L1 + inv(R3) * v.L2 - q(1, 6) * (4 * v.m2 + v.m4 - 1 + 3 * v.m5 + v.m6)),
          m4=-1),
    ],
    Gen.E5: [
        T(lambda v: inv(2 * R2) * v.m3, m1=1, m3=-1),
        T(lambda v: -inv(8 * R3) * v.m4 * (v.m4 - 1), m2=1, m4=-2),
        T(lambda v: inv(24 * R6) * v.m4 * (v.m4 - 1) * (v.m4 - 2), m3=1, m4=-3),
        T(lambda v: inv(4 * R6) * v.m4 * v.m6 * _lam6(v), m4=-1, m6=-1),
        T(lambda v: q(1, 4) * v.m5 * (v.L1 + R3 * v.L2 - HALF * (v.m4 + v.m5 - 1 + v.m6)), m5=-1),
    ],
    Gen.E6: [
        T(lambda v: -inv(2 * R2) * v.m2, m1=1, m2=-1),
        T(lambda v: -inv(R6) * v.m4, m2=1, m4=-1),
        T(lambda v: -inv(2 * R2) * v.m5, m4=1, m5=-1),
        T(lambda v: inv(8 * R3) * v.m4 * (v.m4 - 1), m3=1, m4=-2),
        T(lambda v: inv(2 * R3) * v.m6 * _lam6(v), m6=-1),
    ],
    Gen.H1: [T(lambda v: v.L1 - q(1, 4) * (v.m1 + v.m2 + 2 * v.m3 + v.m4 + v.m5))],
    Gen.H2: [T(lambda v: v.L2 + inv(4 * R3) * (3 * v.m1 + v.m2 - v.m4 - 3 * v.m5 - 2 * v.m6))],
}

ELEMENTARY_ERRATA: list[Erratum] = [
    Erratum(Gen.E2, "1/4 m2 [L1 - L2/sqrt3 - 1/(4 sqrt3)(3m1+m2-1+3m3+m4-m6)]",
            T(lambda v: q(1, 4) * v.m2 * (v.L1 - inv(R3) * v.L2
                                          - q(1, 6) * (3 * v.m1 + v.m2 - 1 + 3 * v.m3 + v.m4 - v.m6)), m2=-1),
            "the mode-dependent part has prefactor 1/6, not 1/(4 sqrt3)"),
    Erratum(Gen.E4, "1/(6 sqrt2) m2 m6 (L2 - (m6-1)/(4 sqrt2))",
            T(lambda v: inv(6 * R2) * v.m2 * v.m6 * _lam6(v), m2=-1, m6=-1),
            "the shift is (m6-1)/(4 sqrt3), as in the other E6-type factors"),
]


# ---------------------------------------------------------------------------


def _index(name: str) -> int:
    return _NAMES.index(name)


def evaluate_terms(terms, exps, l1=ZERO, l2=ZERO, size: int = 14) -> dict:
    """Sum of the terms at one basis monomial.  Terms landing on negative exponents must vanish."""
    v = Vars(exps, l1, l2)
    out: dict = {}
    for t in terms:
        c = t.coef(v)
        if not c:
            continue
        m = list(exps) + [0] * (size - len(exps))
        for name, d in t.shift.items():
            m[_index(name)] += d
        if min(m) < 0:
            raise ValueError(f"term {t.text or t.shift} has nonzero coefficient on a negative exponent")
        key = tuple(m[:size])
        s = out.get(key)
        s = c if s is None else s + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _patched(table, errata, use_errata: bool):
    if not use_errata:
        return table
    out = {g: list(ts) for g, ts in table.items()}
    for e in errata:
        terms = out[e.gen]
        if not e.target:
            terms.append(e.replacement)
            continue
        (i,) = [j for j, t in enumerate(terms) if t.text == e.target]
        terms[i] = e.replacement if e.replacement is not None else Term(lambda v: ZERO, {})
    return out


def closed_rho(g: Gen, exps, corrected: bool = False) -> dict:
    table = _patched(MASTER, MASTER_ERRATA, corrected)
    return evaluate_terms(table[Gen(g)], tuple(exps))


def closed_d_lambda(lam, g: Gen, exps, corrected: bool = False) -> dict:
    table = _patched(ELEMENTARY, ELEMENTARY_ERRATA, corrected)
    return evaluate_terms(table[Gen(g)], tuple(exps)[:6], lam.l1, lam.l2, size=6)


# ---------------------------------------------------------------------------
# discrepancy report
# ---------------------------------------------------------------------------


def _format(p: dict, size: int) -> str:
    from ..pbw import format_polynomial

    if size == 6:
        p = {k + (0,) * 8: v for k, v in p.items()}
    return format_polynomial(p)


def _sub(a: dict, b: dict) -> dict:
    from ..pbw import poly_sub

    return poly_sub(a, b)


def _term_value(t: Term, exps, l1, l2, size):
    return evaluate_terms([t], exps, l1, l2, size)


def discrepancy_report(which: str = "master", samples: int = 200, max_exp: int = 3, seed: int = 0,
                       lam=None) -> list[dict]:
    """Compare the literal table with the engine on random monomials.

    Returns one entry per disagreeing site with ``location``, ``printed_value``,
    ``engine_value`` (both rendered at the first offending monomial),
    ``monomial``, ``hits`` and ``note``.  Disagreements not explained by any
    recorded erratum appear with location ``"<gen>: unexplained"``.
    """
    import random

    from .elementary import SYMBOLIC, d_lambda_apply
    from .master import rho_apply

    if which == "master":
        table, errata, size = MASTER, MASTER_ERRATA, 14
        lam = None

        def engine(g, x):
            return rho_apply(g, x)
    elif which == "elementary":
        table, errata, size = ELEMENTARY, ELEMENTARY_ERRATA, 6
        lam = SYMBOLIC if lam is None else lam

        def engine(g, x):
            return d_lambda_apply(lam, g, x)
    else:
        raise ValueError(f"unknown table {which!r}")
    l1 = lam.l1 if lam is not None else ZERO
    l2 = lam.l2 if lam is not None else ZERO

    rng = random.Random(seed)
    sites: dict[str, dict] = {}
    for g in Gen:
        fixes = [e for e in errata if e.gen == g]
        for _ in range(samples):
            x = tuple(rng.randint(0, max_exp) for _ in range(size))
            try:
                lit = evaluate_terms(table[g], x, l1, l2, size)
            except ValueError as exc:
                lit, broken = None, str(exc)
            eng = engine(g, x)
            if lit == eng:
                continue
            active = []
            for e in fixes:
                old = next(t for t in table[g] if t.text == e.target) if e.target else None
                before = _term_value(old, x, l1, l2, size) if old else {}
                after = _term_value(e.replacement, x, l1, l2, size) if e.replacement else {}
                if before != after:
                    active.append(e)
            locs = [(f"{g.label}: {e.target or 'missing term'}", e.note) for e in active] or [
                (f"{g.label}: unexplained", "no recorded erratum accounts for this")
            ]
            for loc, note in locs:
                entry = sites.get(loc)
                if entry is None:
                    sites[loc] = {
                        "location": loc,
                        "monomial": list(x),
                        "printed_value": _format(lit, size) if lit is not None else broken,
                        "engine_value": _format(eng, size),
                        "difference": _format(_sub(lit, eng), size) if lit is not None else None,
                        "note": note,
                        "hits": 1,
                    }
                else:
                    entry["hits"] += 1
    return sorted(sites.values(), key=lambda d: d["location"])
