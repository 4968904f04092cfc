"""The seven-dimensional representation (0,1) as I01/(I11 + I12).

The carrier is Omega_- modulo the left ideals generated by the two first-layer
extremal vectors Y11 = E-1 and Y12 = E-6^2.  Each weight space is reduced by
exact elimination; a weight survives when the ideal does not fill it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..exactfield import ONE, ZERO, FieldElement
from ..g2core import Gen, Weight, root_of
from ..linalg import nullspace
from ..pbw import multiply
from .elementary import (
    HighestWeight,
    SIMPLE_COORDS,
    d_lambda_apply_poly,
    simple_coords,
    weight_space_monomials,
)

__all__ = [
    "BASIS_01",
    "ideal_component",
    "QuotientWeightSpace",
    "reduce_weight_space",
    "FundamentalRep01",
    "build_fundamental_01",
]

# representatives chosen for the seven weight spaces, top to bottom
BASIS_01 = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 1),
    (0, 1, 0, 1, 0, 0),
    (0, 1, 0, 1, 0, 1),
)


def _full(m6):
    return tuple(m6) + (0,) * 8


def _poly_coords(ys) -> list[tuple[dict, tuple[int, int]]]:
    out = []
    for y in ys:
        depths = {simple_coords(m) for m in y}
        if len(depths) != 1:
            raise ValueError("ideal generator is not a weight vector")
        out.append((y, depths.pop()))
    return out


def ideal_component(ys, a: int, b: int) -> list[list[FieldElement]]:
    """Spanning vectors of (sum_Y Omega_- Y) at depth (a, b), in weight_space_monomials order."""
    basis = weight_space_monomials(a, b)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for y, (ya, yb) in _poly_coords(ys):
        yfull = {_full(m): c for m, c in y.items()}
        for w in weight_space_monomials(a - ya, b - yb):
            prod = multiply({_full(w): ONE}, yfull)
            row = [ZERO] * len(basis)
            for m, c in prod.items():
                row[index[m[:6]]] = c
            if any(row):
                rows.append(row)
    return rows


@dataclass
class QuotientWeightSpace:
    depth: tuple[int, int]
    monomials: list[tuple]
    functionals: list[list[FieldElement]]  # basis of the annihilator of the ideal component

    @property
    def dim(self) -> int:
        return len(self.functionals)


def reduce_weight_space(ys, a: int, b: int) -> QuotientWeightSpace:
    monos = weight_space_monomials(a, b)
    rows = ideal_component(ys, a, b)
    if rows:
        funcs = nullspace(rows, len(monos))
    else:
        funcs = [[ONE if i == j else ZERO for i in range(len(monos))] for j in range(len(monos))]
    return QuotientWeightSpace((a, b), monos, funcs)


@dataclass
class FundamentalRep01:
    lam: HighestWeight
    basis: tuple
    depths: list[tuple[int, int]]
    weights: list[Weight]
    spaces: dict
    matrices: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinate(self, m6) -> FieldElement:
        """c with [X^-(m)] = c [basis element of the same weight]."""
        depth = simple_coords(m6)
        i = self.depths.index(depth)
        return self._phi(i)({tuple(m6): ONE})

    def relation(self, lhs, rhs) -> FieldElement:
        """c with [lhs] = c [rhs] in the quotient (same weight, rhs nonzero)."""
        return self.coordinate(lhs) / self.coordinate(rhs)

    def express(self, v: dict) -> list[FieldElement]:
        """Coordinates of an Omega_- polynomial in the chosen basis (ideal parts dropped)."""
        out = [ZERO] * self.dim
        by_depth: dict = {}
        for m, c in v.items():
            by_depth.setdefault(simple_coords(m), {})[m] = c
        for depth, part in by_depth.items():
            if depth in self.depths:
                i = self.depths.index(depth)
                out[i] = out[i] + self._phi(i)(part)
            else:
                space = self.spaces.get(depth) or reduce_weight_space(_Y01, *depth)
                if space.dim:
                    raise ValueError(f"depth {depth} survives but is not in the basis")
        return out

    def _phi(self, i):
        space = self.spaces[self.depths[i]]
        f = space.functionals[0]
        idx = {m: j for j, m in enumerate(space.monomials)}
        scale = f[idx[self.basis[i]]].inv()

        def phi(part):
            total = ZERO
            for m, c in part.items():
                total = total + c * f[idx[m]]
            return total * scale

        return phi


_Y01 = ({(1, 0, 0, 0, 0, 0): ONE}, {(0, 0, 0, 0, 0, 2): ONE})


def build_fundamental_01() -> FundamentalRep01:
    """Construct (0,1) from scratch: weight spaces, proportionality relations and 7x7 matrices."""
    lam = HighestWeight.from_labels(0, 1)
    ys = _Y01
    spaces = {}
    seen = {(0, 0)}
    queue = deque([(0, 0)])
    order = []
    while queue:
        depth = queue.popleft()
        space = reduce_weight_space(ys, *depth)
        spaces[depth] = space
        if space.dim == 0:
            continue
        if space.dim != 1:
            raise ArithmeticError(f"weight space at depth {depth} has dimension {space.dim}, expected 1")
        order.append(depth)
        for ca, cb in SIMPLE_COORDS:
            nxt = (depth[0] + ca, depth[1] + cb)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    order.sort(key=lambda d: (d[0] + d[1], d))
    if len(order) != 7:
        raise ArithmeticError(f"quotient has dimension {len(order)}, expected 7")
    basis_by_depth = {simple_coords(m): m for m in BASIS_01}
    basis = tuple(basis_by_depth[d] for d in order)
    weights = []
    for d in order:
        w = lam.weight()
        w = w - root_of(Gen.E1).scale(d[0]) - root_of(Gen.E6).scale(d[1])
        weights.append(w)
    rep = FundamentalRep01(lam, basis, order, weights, spaces)
    rep.spaces = dict(spaces)
    for g in Gen:
        cols = [rep.express(d_lambda_apply_poly(lam, g, {b: ONE})) for b in basis]
        rep.matrices[g] = [[cols[j][i] for j in range(7)] for i in range(7)]
    return rep
