"""The master (left-regular) representation on the PBW space and its quotients."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..exactfield import ONE, ZERO, FieldElement, q
from ..g2core import CARTAN_GENS, ROOT_GENS, Gen, Weight, ZERO_WEIGHT, root_of
from ..pbw import IDENTITY, IdealSpec, Monomial, Poly, ideal_reduce, left_mul, left_mul_poly

__all__ = [
    "rho_apply",
    "rho_apply_poly",
    "master_weight_action",
    "QuotientSpace",
    "quotient_catalog",
    "quotient_by_name",
    "induced_action",
    "check_invariance",
    "quotient_weights",
]


def rho_apply(g: Gen, x: Monomial) -> Poly:
    """rho(g) X: left multiplication followed by normal ordering."""
    return dict(left_mul(Gen(g), tuple(x)))


def rho_apply_poly(g: Gen, p: Poly) -> Poly:
    return left_mul_poly(Gen(g), p)


def master_weight_action(x: Monomial) -> Weight:
    """Weight of a basis monomial once the H powers are quotiented out."""
    if x[12] or x[13]:
        raise ValueError("monomial carries H powers; not an eigenvector")
    w = ZERO_WEIGHT
    for g in ROOT_GENS:
        e = x[g]
        if e:
            w = w + root_of(g).scale(e)
    return w


@dataclass(frozen=True)
class QuotientSpace:
    name: str
    caps: IdealSpec
    bosons: int

    @property
    def generators(self) -> tuple[Gen, ...]:
        """Generators surviving in the quotient basis."""
        removed = self.caps.removed_generators()
        return tuple(g for g in Gen if g not in removed)


_LABELS = {"K1": "K1", "K2": "K2", "N5": "N5", "N6": "N6", "N45": "N45", "N15": "N15"}

# grouped by boson count, in the order they are listed in the source table
_CATALOG = (
    (13, (("K1",), ("K2",), ("N5",), ("N6",))),
    (12, (("K1", "K2"), ("K1", "N5"), ("K1", "N6"), ("K2", "N5"), ("K2", "N6"), ("N5", "N6"), ("N45",))),
    (11, (("K1", "K2", "N5"), ("K1", "K2", "N6"), ("K1", "N5", "N6"), ("K2", "N5", "N6"),
          ("K1", "N45"), ("K2", "N45"), ("N45", "N6"))),
    (10, (("K1", "K2", "N5", "N6"), ("K1", "K2", "N45"), ("K1", "N45", "N6"), ("K2", "N45", "N6"))),
    (9, (("K1", "K2", "N45", "N6"), ("N15",))),
    (8, (("K1", "N15"), ("K2", "N15"), ("N15", "N6"))),
    (7, (("K1", "K2", "N15"), ("K1", "N15", "N6"), ("K2", "N15", "N6"))),
    (6, (("K1", "K2", "N15", "N6"),)),
)


def _name(caps: tuple[str, ...]) -> str:
    if len(caps) == 1:
        return f"Omega/V_{caps[0]}"
    return "Omega/U_" + "".join(caps)


def quotient_catalog() -> list[QuotientSpace]:
    """Every listed quotient of the PBW space by a sum of cap subspaces (all caps 1)."""
    out = []
    for bosons, groups in _CATALOG:
        for caps in groups:
            spec = IdealSpec(**{c: 1 for c in caps})
            out.append(QuotientSpace(_name(caps), spec, bosons))
    return out


def quotient_by_name(name: str) -> QuotientSpace:
    for qs in quotient_catalog():
        if qs.name == name:
            return qs
    raise KeyError(f"unknown quotient space {name!r}")


def induced_action(g: Gen, x: Monomial, spec: IdealSpec) -> Poly:
    """Action on the quotient: zero on the subspace, reduced image otherwise."""
    if spec.contains(x):
        return {}
    return ideal_reduce(rho_apply(g, x), spec)


def check_invariance(spec: IdealSpec, monomials) -> list[tuple[Gen, Monomial]]:
    """Pairs (g, x) with x in the subspace but rho(g) x leaving it.  Empty means invariant.

    This is equivalent to ideal_reduce(rho(g) x) == induced_action(g, reduce(x)).
    """
    bad = []
    for x in monomials:
        for g in Gen:
            lhs = ideal_reduce(rho_apply(g, x), spec)
            rhs = induced_action(g, x, spec)
            if lhs != rhs:
                bad.append((g, x))
    return bad


def quotient_weights(space: QuotientSpace, max_degree: int):
    """Distinct weights (with multiplicity) of quotient basis monomials up to a total degree.

    Only meaningful when both H caps are present (otherwise basis elements are
    not weight vectors); raises in that case.
    """
    if space.caps.K1 is None or space.caps.K2 is None:
        raise ValueError(f"{space.name} has no weight basis (H powers survive)")
    gens = [g for g in space.generators if g.is_root]
    counts: dict[Weight, int] = {}
    for exps in _compositions(len(gens), max_degree):
        m = [0] * 14
        for g, e in zip(gens, exps):
            m[g] = e
        m = tuple(m)
        if space.caps.contains(m):
            continue
        w = master_weight_action(m)
        counts[w] = counts.get(w, 0) + 1
    return counts


def _compositions(n: int, max_total: int):
    if n == 0:
        yield ()
        return
    for first in range(max_total + 1):
        for rest in _compositions(n - 1, max_total - first):
            yield (first,) + rest
