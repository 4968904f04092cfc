"""Extremal vectors of d_Lambda, the BGG orbit and the layer ideals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .exactfield import ONE, ZERO, FieldElement
from .g2core import Gen, Weight, half_sum_R, root_of, weyl_reflect
from .linalg import in_span, nullspace
from .pbw import left_mul_poly, poly_scale, poly_sub
from .reps.elementary import (
    HighestWeight,
    d_lambda_apply_poly,
    simple_coords,
    weight_space_monomials,
)
from .reps.fundamental import ideal_component

__all__ = [
    "ExtremalError",
    "ExtremalRecipe",
    "ExtremalVector",
    "string_degrees",
    "extremal_recipes",
    "alternate_y61",
    "materialize_extremal",
    "materialize_all",
    "bgg_weights",
    "y61_scalar",
    "LayerIdeal",
    "layer_sum_ideal",
    "solve_extremal",
    "layer_order_holds",
]

A1, A6 = Gen.EM1, Gen.EM6


class ExtremalError(ArithmeticError):
    """A recipe product failed the extremality check; ``residual`` holds the offending image."""

    def __init__(self, message: str, residual: dict):
        super().__init__(message)
        self.residual = residual


def string_degrees(p: int, q: int) -> tuple[int, int]:
    if p < 0 or q < 0:
        raise ValueError("Dynkin labels must be non-negative")
    return p + 1, q + 1


@dataclass(frozen=True)
class ExtremalRecipe:
    layer: int
    branch: int
    # outermost factor first; exponents are (coefficient of P, coefficient of Q)
    factors: tuple[tuple[Gen, tuple[int, int]], ...]

    @property
    def label(self) -> str:
        return f"Y{self.layer}{self.branch}"

    def exponents(self, P: int, Q: int) -> list[tuple[Gen, int]]:
        return [(g, a * P + b * Q) for g, (a, b) in self.factors]

    def word(self, P: int, Q: int) -> str:
        return " ".join(g.label if e == 1 else f"{g.label}^{e}" for g, e in self.exponents(P, Q) if e) or "1"


_CHAINS = {
    1: [(A1, (1, 0)), (A6, (3, 1)), (A1, (2, 1)), (A6, (3, 2)), (A1, (1, 1)), (A6, (0, 1))],
    2: [(A6, (0, 1)), (A1, (1, 1)), (A6, (3, 2)), (A1, (2, 1)), (A6, (3, 1)), (A1, (1, 0))],
}


def _recipe(layer: int, branch: int) -> ExtremalRecipe:
    chain = _CHAINS[branch][:layer]
    return ExtremalRecipe(layer, branch, tuple(reversed(chain)))


def extremal_recipes() -> list[ExtremalRecipe]:
    """Y01, Y11, Y12, ..., Y52, Y61 (Y61 built on the first branch)."""
    out = [ExtremalRecipe(0, 1, ())]
    for layer in range(1, 6):
        out.append(_recipe(layer, 1))
        out.append(_recipe(layer, 2))
    out.append(_recipe(6, 1))
    return out


def alternate_y61() -> ExtremalRecipe:
    """Y61 reached through the second branch, E-1^P Y52."""
    return _recipe(6, 2)


@dataclass
class ExtremalVector:
    recipe: ExtremalRecipe
    lam: HighestWeight
    vector: dict
    weight: Weight


def _build(recipe: ExtremalRecipe, P: int, Q: int) -> dict:
    v = {(0,) * 14: ONE}
    for g, e in reversed(recipe.exponents(P, Q)):
        for _ in range(e):
            v = left_mul_poly(g, v)
    return {m[:6]: c for m, c in v.items()}


def _recipe_weight(lam: HighestWeight, recipe: ExtremalRecipe, P: int, Q: int) -> Weight:
    w = lam.weight()
    for g, e in recipe.exponents(P, Q):
        w = w + root_of(g).scale(e)
    return w


def materialize_extremal(lam: HighestWeight, recipe: ExtremalRecipe) -> ExtremalVector:
    p, q = lam.dynkin()
    P, Q = string_degrees(p, q)
    vec = _build(recipe, P, Q)
    for g in (Gen.E1, Gen.E2, Gen.E3, Gen.E4, Gen.E5, Gen.E6):
        image = d_lambda_apply_poly(lam, g, vec)
        if image:
            raise ExtremalError(f"{recipe.label}: d({g.label}) Y is nonzero", image)
    weight = _recipe_weight(lam, recipe, P, Q)
    for h, comp in ((Gen.H1, weight.comp1), (Gen.H2, weight.comp2)):
        residual = poly_sub(d_lambda_apply_poly(lam, h, vec), poly_scale(vec, comp))
        if residual:
            raise ExtremalError(f"{recipe.label}: not an eigenvector of {h.label}", residual)
    return ExtremalVector(recipe, lam, vec, weight)


def materialize_all(lam: HighestWeight) -> list[ExtremalVector]:
    return [materialize_extremal(lam, r) for r in extremal_recipes()]


def bgg_weights(lam: HighestWeight) -> list[tuple[Weight, tuple[int, ...]]]:
    """Orbit {w(Lambda + R) - R}, each with a shortest reflection word (first-applied reflection first)."""
    R = half_sum_R()
    start = lam.weight() + R
    alphas = {1: root_of(Gen.E1), 6: root_of(Gen.E6)}
    seen = {start: ()}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for s in (1, 6):
            u = weyl_reflect(alphas[s], v)
            if u not in seen:
                seen[u] = seen[v] + (s,)
                queue.append(u)
    return [(v - R, word) for v, word in seen.items()]


def y61_scalar(lam: HighestWeight) -> FieldElement:
    """c with E-6^Q Y51 = c * E-1^P Y52 after normal ordering."""
    p, q = lam.dynkin()
    P, Q = string_degrees(p, q)
    a = _build(_recipe(6, 1), P, Q)
    b = _build(alternate_y61(), P, Q)
    if set(a) != set(b):
        raise ArithmeticError("the two forms of Y61 have different supports")
    m0 = next(iter(b))
    c = a[m0] / b[m0]
    for m in b:
        if a[m] != c * b[m]:
            raise ArithmeticError("the two forms of Y61 are not proportional")
    return c


@dataclass
class LayerIdeal:
    layer: int
    generators: tuple[dict, dict]

    def contains(self, poly: dict) -> bool:
        """Exact membership in Omega_- Y_j1 + Omega_- Y_j2, weight component by weight component."""
        parts: dict = {}
        for m, c in poly.items():
            if c:
                parts.setdefault(simple_coords(m), {})[tuple(m)] = c
        for (a, b), part in parts.items():
            monos = weight_space_monomials(a, b)
            target = [part.get(m, ZERO) for m in monos]
            rows = ideal_component(self.generators, a, b)
            if not in_span(rows, target):
                return False
        return True


def layer_sum_ideal(j: int, lam: HighestWeight) -> LayerIdeal:
    if not 1 <= j <= 5:
        raise ValueError("layer index must be between 1 and 5")
    p, q = lam.dynkin()
    P, Q = string_degrees(p, q)
    return LayerIdeal(j, (_build(_recipe(j, 1), P, Q), _build(_recipe(j, 2), P, Q)))


def solve_extremal(lam: HighestWeight, a: int, b: int) -> list[dict]:
    """Extremal vectors at depth (a, b) as the common kernel of the six raising maps."""
    monos = weight_space_monomials(a, b)
    rows = []
    for g in (Gen.E1, Gen.E2, Gen.E3, Gen.E4, Gen.E5, Gen.E6):
        images = [d_lambda_apply_poly(lam, g, {m: ONE}) for m in monos]
        targets = sorted({t for im in images for t in im})
        for t in targets:
            rows.append([im.get(t, ZERO) for im in images])
    kernel = nullspace(rows, len(monos)) if rows else [
        [ONE if i == j else ZERO for i in range(len(monos))] for j in range(len(monos))
    ]
    return [{m: c for m, c in zip(monos, v) if c} for v in kernel]


def layer_order_holds(vectors: list[ExtremalVector]) -> bool:
    """Deeper layers sit below shallower ones by non-negative simple-root combinations."""
    depth = {}
    for v in vectors:
        m = next(iter(v.vector))
        depth[v.recipe.label] = (v.recipe.layer, simple_coords(m))
    for la, (i, da) in depth.items():
        for lb, (j, db) in depth.items():
            if i < j and (db[0] < da[0] or db[1] < da[1]):
                return False
    return True
