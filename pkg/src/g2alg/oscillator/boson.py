"""Normal-ordered multi-mode boson polynomials and their unnormalized Fock action."""

from __future__ import annotations

from math import comb, factorial

from ..exactfield import ONE, ZERO, FieldElement, render

__all__ = ["BosonPoly", "boson_multiply", "fock_apply", "falling"]


def falling(n: int, r: int) -> int:
    out = 1
    for i in range(r):
        out *= n - i
    return out


def _is_zero(c) -> bool:
    return not c


class BosonPoly:
    """Sparse sum of coefficient * prod_i a_i^dag^{s_i} a_i^{r_i}.

    Keys are tuples ((s_1, r_1), ..., (s_k, r_k)); coefficients are
    FieldElements or ParamPolys.  Products are normal-ordered on the fly.
    """

    __slots__ = ("modes", "terms")

    def __init__(self, modes: int, terms=None):
        self.modes = modes
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not _is_zero(c):
                    self.terms[k] = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, modes: int) -> BosonPoly:
        return cls(modes, {((0, 0),) * modes: c})

    @classmethod
    def _single(cls, i: int, pair, modes: int) -> BosonPoly:
        if not 1 <= i <= modes:
            raise ValueError(f"mode {i} out of range 1..{modes}")
        key = [(0, 0)] * modes
        key[i - 1] = pair
        return cls(modes, {tuple(key): ONE})

    @classmethod
    def create(cls, i: int, modes: int) -> BosonPoly:
        return cls._single(i, (1, 0), modes)

    @classmethod
    def annihilate(cls, i: int, modes: int) -> BosonPoly:
        return cls._single(i, (0, 1), modes)

    @classmethod
    def number(cls, i: int, modes: int) -> BosonPoly:
        return cls._single(i, (1, 1), modes)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> BosonPoly:
        if isinstance(other, BosonPoly):
            if other.modes != self.modes:
                raise ValueError("mode counts differ")
            return other
        return BosonPoly.constant(other, self.modes)

    def __add__(self, other) -> BosonPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if _is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return BosonPoly(self.modes, out)

    __radd__ = __add__

    def __neg__(self) -> BosonPoly:
        return BosonPoly(self.modes, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> BosonPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BosonPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> BosonPoly:
        if isinstance(other, BosonPoly):
            return boson_multiply(self, other)
        return BosonPoly(self.modes, {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, other) -> BosonPoly:
        return BosonPoly(self.modes, {k: other * c for k, c in self.terms.items()})

    def __pow__(self, n: int) -> BosonPoly:
        out = BosonPoly.constant(ONE, self.modes)
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other: BosonPoly) -> BosonPoly:
        return self * other - other * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, BosonPoly):
            other = self._coerce(other)
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def substitute(self, fn) -> BosonPoly:
        """Apply ``fn`` to every coefficient (e.g. evaluate Lambda)."""
        return BosonPoly(self.modes, {k: fn(c) for k, c in self.terms.items()})

    def apply(self, ket) -> dict:
        return fock_apply(self, ket)

    # -- text ---------------------------------------------------------------

    def sorted_terms(self):
        """Creation part descending, then annihilation part descending."""
        def key(item):
            k = item[0]
            return (tuple(-p[0] for p in k), tuple(-p[1] for p in k))
        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            parts.append(f"[{_coef_text(c)}] {format_boson_monomial(k)}")
        return " + ".join(parts)

    __repr__ = __str__


def _coef_text(c) -> str:
    if isinstance(c, FieldElement):
        return render(c)
    return str(c)


def format_boson_monomial(key) -> str:
    created = []
    killed = []
    for i, (s, r) in enumerate(key, start=1):
        if s:
            created.append(f"a{i}+" + (f"^{s}" if s > 1 else ""))
        if r:
            killed.append(f"a{i}" + (f"^{r}" if r > 1 else ""))
    return "*".join(created + killed) or "1"


def _mode_product(p1, p2):
    """(a+^s1 a^r1)(a+^s2 a^r2) as a list of ((s, r), integer coefficient)."""
    s1, r1 = p1
    s2, r2 = p2
    out = []
    for t in range(min(r1, s2) + 1):
        out.append(((s1 + s2 - t, r1 + r2 - t), comb(r1, t) * comb(s2, t) * factorial(t)))
    return out


def boson_multiply(p: BosonPoly, q: BosonPoly) -> BosonPoly:
    if p.modes != q.modes:
        raise ValueError("mode counts differ")
    out: dict = {}
    for k1, c1 in p.terms.items():
        for k2, c2 in q.terms.items():
            partial = [((), 1)]
            for a, b in zip(k1, k2):
                options = _mode_product(a, b)
                partial = [(key + (pair,), n * m) for key, n in partial for pair, m in options]
            coeff = c1 * c2
            for key, n in partial:
                term = coeff * n
                s = out.get(key)
                s = term if s is None else s + term
                if _is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
    return BosonPoly(p.modes, out)


def fock_apply(p: BosonPoly, ket) -> dict:
    """Unnormalized action: a|n> = n|n-1>, a+|n> = |n+1>.  Returns {ket: coefficient}."""
    ket = tuple(ket)
    if len(ket) != p.modes:
        raise ValueError("ket and operator have different mode counts")
    out: dict = {}
    for key, c in p.terms.items():
        n = 1
        new = []
        for occ, (s, r) in zip(ket, key):
            if r > occ:
                n = 0
                break
            n *= falling(occ, r)
            new.append(occ - r + s)
        if not n:
            continue
        new = tuple(new)
        term = c * n
        s = out.get(new)
        s = term if s is None else s + term
        if _is_zero(s):
            out.pop(new, None)
        else:
            out[new] = s
    return out
