"""Root system, Cartan-Weyl basis and structure constants of G2.

Roots live in the two-dimensional frame where

    alpha1 = (1/4, -sqrt3/4)   alpha2 = (1/4, -1/(4 sqrt3))   alpha3 = (1/2, 0)
    alpha4 = (1/4, 1/(4 sqrt3)) alpha5 = (1/4, sqrt3/4)       alpha6 = (0, 1/(2 sqrt3))

with alpha1 (long) and alpha6 (short) simple.  Generators are ordered
E-1 < ... < E-6 < E1 < ... < E6 < H1 < H2, which is the PBW order used by
:mod:`g2alg.pbw`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exactfield import ONE, R2, R3, R6, ZERO, FieldElement, q

__all__ = [
    "Gen",
    "Weight",
    "RootVector",
    "WeightVector",
    "ROOT_GENS",
    "NEG_GENS",
    "POS_GENS",
    "CARTAN_GENS",
    "positive_roots",
    "root_of",
    "gen_of_root",
    "inner_product",
    "pairing",
    "bracket",
    "structure_constant",
    "structure_constants",
    "weyl_reflect",
    "half_sum_R",
    "dynkin_to_weight",
    "weight_to_dynkin",
    "parse_gen",
]


class Gen(IntEnum):
    """Cartan-Weyl generators in standard (PBW) order."""

    EM1 = 0
    EM2 = 1
    EM3 = 2
    EM4 = 3
    EM5 = 4
    EM6 = 5
    E1 = 6
    E2 = 7
    E3 = 8
    E4 = 9
    E5 = 10
    E6 = 11
    H1 = 12
    H2 = 13

    @property
    def is_cartan(self) -> bool:
        return self >= 12

    @property
    def is_root(self) -> bool:
        return self < 12

    @property
    def is_negative(self) -> bool:
        return self < 6

    @property
    def is_positive(self) -> bool:
        return 6 <= self < 12

    @property
    def index(self) -> int:
        """Root index 1..6 for root vectors, 1..2 for H1/H2."""
        if self >= 12:
            return self - 11
        return self % 6 + 1

    @property
    def signed_index(self) -> int:
        if self >= 12:
            raise ValueError(f"{self.label} is not a root vector")
        return -self.index if self < 6 else self.index

    @property
    def label(self) -> str:
        if self >= 12:
            return f"H{self.index}"
        return f"E{self.signed_index}"

    @classmethod
    def root(cls, signed: int) -> Gen:
        """E_{+-i} from a signed root index."""
        if signed == 0 or abs(signed) > 6:
            raise ValueError(f"bad root index {signed}")
        return cls(signed - 1 + 6) if signed > 0 else cls(-signed - 1)


NEG_GENS = tuple(Gen(i) for i in range(6))
POS_GENS = tuple(Gen(i) for i in range(6, 12))
ROOT_GENS = NEG_GENS + POS_GENS
CARTAN_GENS = (Gen.H1, Gen.H2)


def parse_gen(text: str) -> Gen:
    """Parse ``E-3``, ``E3``, ``H1`` (also accepts ``E+3``)."""
    t = text.strip().upper()
    if t in ("H1", "H2"):
        return Gen.H1 if t == "H1" else Gen.H2
    if t.startswith("E"):
        try:
            return Gen.root(int(t[1:]))
        except ValueError:
            pass
    raise ValueError(f"unknown generator {text!r}; expected E-1..E-6, E1..E6, H1, H2")


@dataclass(frozen=True)
class Weight:
    """A vector in the two-dimensional Cartan frame."""

    comp1: FieldElement
    comp2: FieldElement

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.comp1 + other.comp1, self.comp2 + other.comp2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.comp1 - other.comp1, self.comp2 - other.comp2)

    def __neg__(self) -> Weight:
        return Weight(-self.comp1, -self.comp2)

    def scale(self, c) -> Weight:
        return Weight(self.comp1 * c, self.comp2 * c)

    def __iter__(self):
        yield self.comp1
        yield self.comp2

    def __getitem__(self, i: int) -> FieldElement:
        return (self.comp1, self.comp2)[i]

    def is_zero(self) -> bool:
        return self.comp1.is_zero() and self.comp2.is_zero()

    def __str__(self) -> str:
        return f"({self.comp1}, {self.comp2})"


RootVector = Weight
WeightVector = Weight

ZERO_WEIGHT = Weight(ZERO, ZERO)

_POSITIVE = (
    Weight(q(1, 4), -R3 * q(1, 4)),
    Weight(q(1, 4), -R3 * q(1, 12)),  # -1/(4 sqrt3)
    Weight(q(1, 2), ZERO),
    Weight(q(1, 4), R3 * q(1, 12)),
    Weight(q(1, 4), R3 * q(1, 4)),
    Weight(ZERO, R3 * q(1, 6)),  # 1/(2 sqrt3)
)


def positive_roots() -> list[Weight]:
    return list(_POSITIVE)


def root_of(g: Gen) -> Weight:
    if g.is_cartan:
        raise ValueError(f"{g.label} has no root")
    r = _POSITIVE[g.index - 1]
    return r if g.is_positive else -r


_ROOT_LOOKUP = {(r.comp1, r.comp2): Gen.root(i + 1) for i, r in enumerate(_POSITIVE)}
_ROOT_LOOKUP.update({(-r.comp1, -r.comp2): Gen.root(-(i + 1)) for i, r in enumerate(_POSITIVE)})


def gen_of_root(v: Weight) -> Gen | None:
    """Generator whose root is ``v``; None if ``v`` is not a root."""
    return _ROOT_LOOKUP.get((v.comp1, v.comp2))


def inner_product(u: Weight, v: Weight) -> FieldElement:
    return u.comp1 * v.comp1 + u.comp2 * v.comp2


def pairing(v: Weight, alpha: Weight) -> FieldElement:
    """Dynkin pairing <v, alpha> = 2 (v, alpha) / (alpha, alpha)."""
    return inner_product(v, alpha) * 2 / inner_product(alpha, alpha)


def weyl_reflect(gamma: Weight, v: Weight) -> Weight:
    if gamma.is_zero():
        raise ValueError("cannot reflect in the zero vector")
    return v - gamma.scale(pairing(v, gamma))


def half_sum_R() -> Weight:
    total = ZERO_WEIGHT
    for r in _POSITIVE:
        total = total + r
    return total.scale(q(1, 2))


def dynkin_to_weight(p: int, qq: int) -> Weight:
    """The weight with <L, alpha1> = p and <L, alpha6> = q."""
    if p < 0 or qq < 0:
        raise ValueError("Dynkin labels must be non-negative")
    a1, a6 = _POSITIVE[0], _POSITIVE[5]
    # rows: 2 a/(a,a) . (x, y) = label
    s1 = 2 / inner_product(a1, a1)
    s6 = 2 / inner_product(a6, a6)
    m11, m12 = a1.comp1 * s1, a1.comp2 * s1
    m21, m22 = a6.comp1 * s6, a6.comp2 * s6
    det = m11 * m22 - m12 * m21
    x = (m22 * p - m12 * qq) / det
    y = (m11 * qq - m21 * p) / det
    return Weight(x, y)


def weight_to_dynkin(v: Weight) -> tuple[Fraction, Fraction]:
    return (
        pairing(v, _POSITIVE[0]).to_fraction(),
        pairing(v, _POSITIVE[5]).to_fraction(),
    )


# -- structure constants -----------------------------------------------------

_N_BASE = {
    (6, 1): R2 * q(1, 4),  # 1/(2 sqrt2)
    (6, 4): R2 * q(1, 4),
    (4, 2): R2 * q(1, 4),
    (1, 5): R2 * q(1, 4),
    (6, 2): R6 * q(1, 6),  # 1/sqrt6
}


@lru_cache(maxsize=None)
def structure_constants() -> dict[tuple[int, int], FieldElement]:
    """All N_{a,b} (signed root indices) with alpha_a + alpha_b a root.

    Closure of the five tabulated constants under antisymmetry,
    N_{-a,-b} = -N_{a,b}, and the cyclic rule N_{a,b} = N_{b,c} = N_{c,a}
    for a + b + c = 0 (invariant form with B(E_a, E_-a) uniform).
    """
    def root(i: int) -> Weight:
        return root_of(Gen.root(i))

    def third(i: int, j: int):
        g = gen_of_root(-(root(i) + root(j)))
        return None if g is None else g.signed_index

    table = dict(_N_BASE)
    changed = True
    while changed:
        changed = False
        for (i, j), v in list(table.items()):
            k = third(i, j)
            for key, val in (((j, i), -v), ((-i, -j), -v), ((j, k), v), ((k, i), v)):
                if key in table:
                    if table[key] != val:
                        raise AssertionError(f"inconsistent structure constant {key}")
                else:
                    table[key] = val
                    changed = True
    signed = [s * i for i in range(1, 7) for s in (1, -1)]
    for i in signed:
        for j in signed:
            if gen_of_root(root(i) + root(j)) is not None and (i, j) not in table:
                raise AssertionError(f"structure constant N_{i},{j} not determined")
    return table


def structure_constant(a: int, b: int) -> FieldElement:
    """N_{a,b} for signed root indices; zero when alpha_a + alpha_b is not a root."""
    return structure_constants().get((a, b), ZERO)


@lru_cache(maxsize=None)
def _bracket(x: Gen, y: Gen) -> tuple[tuple[Gen, FieldElement], ...]:
    if x == y:
        return ()
    if x.is_cartan and y.is_cartan:
        return ()
    if x.is_cartan:
        return ((y, root_of(y)[x.index - 1]),)
    if y.is_cartan:
        return ((x, -root_of(x)[y.index - 1]),)
    a, b = root_of(x), root_of(y)
    s = a + b
    if s.is_zero():
        return tuple((h, a[h.index - 1]) for h in CARTAN_GENS if a[h.index - 1])
    g = gen_of_root(s)
    if g is None:
        return ()
    return ((g, structure_constant(x.signed_index, y.signed_index)),)


def bracket(x: Gen, y: Gen) -> dict[Gen, FieldElement]:
    """[x, y] as a linear combination of generators (zero coefficients omitted)."""
    return {g: c for g, c in _bracket(Gen(x), Gen(y)) if c}


def all_pairs():
    """The 91 unordered pairs of distinct generators."""
    return list(combinations(Gen, 2))


def all_triples():
    """The 364 unordered triples of distinct generators."""
    return list(combinations(Gen, 3))


def cartan_value(g: Gen, i: int) -> FieldElement:
    """alpha^{(i)} = alpha(H_i) for root generator g."""
    return root_of(g)[i - 1]


