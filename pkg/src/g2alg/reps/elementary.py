"""The elementary (Verma-type) representation d_Lambda on Omega_-.

Vectors are sparse dicts keyed by 6-tuples (m1..m6).  Coefficients are
FieldElements for a numeric highest weight and ParamPolys when Lambda is
kept symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..exactfield import ONE, ZERO, FieldElement
from ..g2core import Gen, Weight, dynkin_to_weight, root_of, weight_to_dynkin
from ..params import L1, L2, ParamPoly
from ..pbw import Poly, left_mul, poly_add_into
from ..g2core import NEG_GENS

__all__ = [
    "HighestWeight",
    "SYMBOLIC",
    "to_full",
    "from_full",
    "reduce_to_verma",
    "d_lambda_apply",
    "d_lambda_apply_poly",
    "d_I01_I12_apply",
    "verma_weight",
    "minus_monomials",
    "SIMPLE_COORDS",
    "simple_coords",
    "weight_space_monomials",
]


@dataclass(frozen=True)
class HighestWeight:
    l1: Any
    l2: Any
    labels: tuple[int, int] | None = None

    @classmethod
    def from_labels(cls, p: int, qq: int) -> HighestWeight:
        w = dynkin_to_weight(p, qq)
        return cls(w.comp1, w.comp2, (p, qq))

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.l1, ParamPoly) or isinstance(self.l2, ParamPoly)

    def weight(self) -> Weight:
        if self.is_symbolic:
            raise ValueError("symbolic highest weight has no numeric weight")
        return Weight(FieldElement.coerce(self.l1), FieldElement.coerce(self.l2))

    def dynkin(self):
        if self.labels is not None:
            return self.labels
        return weight_to_dynkin(self.weight())

    def __str__(self) -> str:
        return f"({self.l1}, {self.l2})"


SYMBOLIC = HighestWeight(L1, L2)


def to_full(m6) -> tuple:
    return tuple(m6) + (0,) * 8


def from_full(m14) -> tuple:
    return tuple(m14[:6])


def reduce_to_verma(p: Poly, lam: HighestWeight) -> dict:
    """Quotient by the left ideal: E+ tails vanish, trailing H^k -> Lambda^k."""
    out: dict = {}
    for m, c in p.items():
        if any(m[6:12]):
            continue
        k1, k2 = m[12], m[13]
        coeff = c
        if k1:
            coeff = coeff * _pow(lam.l1, k1)
        if k2:
            coeff = coeff * _pow(lam.l2, k2)
        if not coeff:
            continue
        key = m[:6]
        s = out.get(key)
        s = coeff if s is None else s + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _pow(x, k):
    r = x
    for _ in range(k - 1):
        r = r * x
    return r


def d_lambda_apply(lam: HighestWeight, g: Gen, x) -> dict:
    """d_Lambda(g) X^-(m): rho_apply on the embedded monomial, then reduce."""
    return reduce_to_verma(left_mul(Gen(g), to_full(x)), lam)


def d_lambda_apply_poly(lam: HighestWeight, g: Gen, v: dict) -> dict:
    out: dict = {}
    for m, c in v.items():
        poly_add_into(out, d_lambda_apply(lam, g, m), c)
    return out


def d_I01_I12_apply(l1, g: Gen, x) -> dict:
    """The quotient d_{I01/I12} at Lambda2 = 0: d_Lambda with every m6-bearing term dropped."""
    lam = l1 if isinstance(l1, HighestWeight) else HighestWeight(l1, ZERO)
    if lam.l2 != 0:
        raise ValueError("d_{I01/I12} as a five-mode representation requires Lambda2 = 0")
    x = tuple(x)
    if len(x) == 5:
        x = x + (0,)
    if x[5]:
        raise ValueError("basis monomials of V'_{I01/I12} have m6 = 0")
    return {m: c for m, c in d_lambda_apply(lam, g, x).items() if m[5] == 0}


def verma_weight(lam: HighestWeight, m6) -> Weight:
    """Weight Lambda - sum m_i alpha_i of X^-(m)."""
    w = lam.weight()
    for g, e in zip(NEG_GENS, m6):
        if e:
            w = w + root_of(g).scale(e)
    return w


def minus_monomials(max_degree: int, modes: int = 6):
    """All exponent tuples of total degree <= max_degree, graded then lexicographic."""
    out = []

    def rec(prefix, left, n):
        if n == 0:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, n - 1)

    rec([], max_degree, modes)
    out.sort(key=lambda t: (sum(t), t))
    if modes < 6:
        out = [t + (0,) * (6 - modes) for t in out]
    return out


# (alpha1, alpha6) coefficients of alpha_1 .. alpha_6
SIMPLE_COORDS = ((1, 0), (1, 1), (2, 3), (1, 2), (1, 3), (0, 1))


def simple_coords(m6) -> tuple[int, int]:
    """Depth of X^-(m) below the highest weight, in simple-root units (a, b)."""
    a = sum(e * c[0] for e, c in zip(m6, SIMPLE_COORDS))
    b = sum(e * c[1] for e, c in zip(m6, SIMPLE_COORDS))
    return a, b


def weight_space_monomials(a: int, b: int) -> list[tuple]:
    """All Omega_- monomials of weight Lambda - a*alpha1 - b*alpha6, lexicographically descending."""
    out = []

    def rec(i, ra, rb, prefix):
        if i == 6:
            if ra == 0 and rb == 0:
                out.append(tuple(prefix))
            return
        ca, cb = SIMPLE_COORDS[i]
        e = 0
        while e * ca <= ra and e * cb <= rb:
            rec(i + 1, ra - e * ca, rb - e * cb, prefix + [e])
            e += 1

    if a >= 0 and b >= 0:
        rec(0, a, b, [])
    out.sort(reverse=True)
    return out
