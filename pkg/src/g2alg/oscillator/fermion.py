"""Three fermion modes (labelled 2, 4, 6) as exact 8x8 matrices.

Basis |m2, m4, m6> = (f2+)^m2 (f4+)^m4 (f6+)^m6 |0>, index 4*m2 + 2*m4 + m6.
"""

from __future__ import annotations

from itertools import product

from ..exactfield import ONE, R2, R3, R6, ZERO, FieldElement, q, render
from ..g2core import Gen
from ..linalg import identity, mat_mul, zeros

__all__ = [
    "MODES",
    "KETS",
    "ket_index",
    "FermionOp",
    "f_create",
    "f_annihilate",
    "f_number",
    "f_identity",
    "transcribed_F",
    "generated_F",
    "realization_F",
    "correspondence_terms",
    "invariant_block",
    "SEVEN_KETS",
]

MODES = (2, 4, 6)
KETS = tuple(product((0, 1), repeat=3))
# kets of the chosen basis 1, E-6, E-2, E-4, E-4E-6, E-2E-4, E-2E-4E-6
SEVEN_KETS = ((0, 0, 0), (0, 0, 1), (1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1))


def ket_index(ket) -> int:
    m2, m4, m6 = ket
    return 4 * m2 + 2 * m4 + m6


class FermionOp:
    __slots__ = ("m",)

    def __init__(self, m):
        self.m = [list(r) for r in m]

    def __add__(self, other):
        other = _lift(other)
        return FermionOp([[a + b for a, b in zip(r, s)] for r, s in zip(self.m, other.m)])

    __radd__ = __add__

    def __neg__(self):
        return FermionOp([[-a for a in r] for r in self.m])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, FermionOp):
            return FermionOp(mat_mul(self.m, other.m))
        other = FieldElement.coerce(other)
        return FermionOp([[a * other for a in r] for r in self.m])

    def __rmul__(self, other):
        other = FieldElement.coerce(other)
        return FermionOp([[other * a for a in r] for r in self.m])

    def commutator(self, other):
        return self * other - other * self

    def anticommutator(self, other):
        return self * other + other * self

    def is_zero(self) -> bool:
        return not any(x for r in self.m for x in r)

    def __eq__(self, other):
        return (self - other).is_zero()

    __hash__ = None

    def entry(self, out_ket, in_ket) -> FieldElement:
        return self.m[ket_index(out_ket)][ket_index(in_ket)]

    def __str__(self) -> str:
        rows = []
        for k in KETS:
            rows.append(" ".join(render(self.m[ket_index(k)][ket_index(j)]) for j in KETS))
        return "\n".join(rows)


def _lift(x) -> FermionOp:
    if isinstance(x, FermionOp):
        return x
    return FermionOp(identity(8)) * x


def _sign_before(ket, pos: int) -> int:
    return -1 if sum(ket[:pos]) % 2 else 1


def f_create(i: int) -> FermionOp:
    pos = MODES.index(i)
    m = zeros(8, 8)
    for k in KETS:
        if k[pos] == 0:
            new = list(k)
            new[pos] = 1
            m[ket_index(new)][ket_index(k)] = FieldElement.coerce(_sign_before(k, pos))
    return FermionOp(m)


def f_annihilate(i: int) -> FermionOp:
    pos = MODES.index(i)
    m = zeros(8, 8)
    for k in KETS:
        if k[pos] == 1:
            new = list(k)
            new[pos] = 0
            m[ket_index(new)][ket_index(k)] = FieldElement.coerce(_sign_before(k, pos))
    return FermionOp(m)


def f_number(i: int) -> FermionOp:
    return f_create(i) * f_annihilate(i)


def f_identity() -> FermionOp:
    return FermionOp(identity(8))


def transcribed_F() -> dict:
    """The three-fermion operators exactly as printed."""
    fd = {i: f_create(i) for i in MODES}
    f = {i: f_annihilate(i) for i in MODES}
    n = {i: f_number(i) for i in MODES}
    one = f_identity()
    inv = lambda x: x.inv()
    return {
        Gen.EM1: inv(2 * R2) * (one - q(1, 2) * n[4]) * fd[2] * f[6],
        Gen.EM2: (one + n[4] * n[6] - n[6]) * fd[2] + inv(2 * R6) * (one - n[2]) * fd[4] * f[6],
        Gen.EM3: 3 * R2 * (one + n[6]) * fd[2] * fd[4],
        Gen.EM4: (one - q(1, 2) * n[2] - q(1, 2) * n[2] * n[6]) * fd[4] + 4 * R6 * n[4] * fd[2] * fd[6],
        Gen.EM5: 6 * R2 * fd[4] * fd[6],
        Gen.EM6: (one - n[2] + n[4] + n[2] * n[4]) * fd[6] + inv(2 * R6) * (one - n[6]) * f[2] * fd[4],
        Gen.E1: -inv(2 * R2) * (one + n[4]) * f[2] * fd[6],
        Gen.E2: q(1, 24) * (one + n[4] - n[6]) * f[2] - inv(R6) * (one - n[2]) * f[4] * fd[6],
        Gen.E3: -inv(24 * R2) * (one - q(1, 2) * n[6]) * f[2] * f[4],
        Gen.E4: q(1, 12) * (one - q(1, 2) * n[6] - q(1, 2) * n[2] * n[6]) * f[4] - inv(48 * R6) * n[4] * f[2] * f[6],
        Gen.E5: -inv(48 * R2) * f[4] * f[6],
        Gen.E6: q(1, 24) * (one - n[2] + q(1, 2) * n[2] * n[4]) * f[6] - inv(R6) * (one - n[6]) * fd[2] * f[4],
        Gen.H1: q(1, 4) * (one - n[2] - n[4]),
        Gen.H2: inv(4 * R3) * (one + n[2] - n[4] - 2 * n[6]),
    }


def _ket_of(m6) -> tuple:
    return (m6[1], m6[3], m6[5])


def generated_F(rep=None) -> dict:
    """The (0,1) matrices placed on the seven kets; |1,0,1> carries the trivial representation."""
    if rep is None:
        from ..reps.fundamental import build_fundamental_01

        rep = build_fundamental_01()
    kets = [_ket_of(b) for b in rep.basis]
    out = {}
    for g, mat in rep.matrices.items():
        m = zeros(8, 8)
        for i, ki in enumerate(kets):
            for j, kj in enumerate(kets):
                m[ket_index(ki)][ket_index(kj)] = mat[i][j]
        out[g] = FermionOp(m)
    return out


def realization_F(g: Gen, variant: str = "generated") -> FermionOp:
    table = generated_F() if variant == "generated" else transcribed_F()
    return table[Gen(g)]


_OP_TEXT = {(0, 1): "f{}+", (0, 0): "(1-n{})", (1, 1): "n{}", (1, 0): "f{}"}


def correspondence_terms(op: FermionOp) -> list[tuple[FieldElement, str]]:
    """Rewrite a matrix as a sum of mode-ordered products f/f+/n/(1-n), one per nonzero entry.

    Each product acts on exactly one ket, so the coefficient is the matrix entry
    divided by the sign the product picks up on that ket.
    """
    out = []
    for src in KETS:
        for dst in KETS:
            c = op.entry(dst, src)
            if not c:
                continue
            prod = f_identity()
            text = []
            for i, a, b in zip(MODES, src, dst):
                text.append(_OP_TEXT[(a, b)].format(i))
                if (a, b) == (0, 1):
                    prod = prod * f_create(i)
                elif (a, b) == (1, 0):
                    prod = prod * f_annihilate(i)
                elif (a, b) == (1, 1):
                    prod = prod * f_number(i)
                else:
                    prod = prod * (f_identity() - f_number(i))
            sign = prod.entry(dst, src)
            out.append((c / sign, "*".join(text)))
    return out


def invariant_block(op: FermionOp, kets=SEVEN_KETS):
    """(7x7 block on ``kets``, leaked entries) where leaks map the span outside itself."""
    idx = [ket_index(k) for k in kets]
    others = [i for i in range(8) if i not in idx]
    block = [[op.m[i][j] for j in idx] for i in idx]
    leaks = [(i, j) for j in idx for i in others if op.m[i][j]]
    return block, leaks
