"""PBW normal ordering in the enveloping algebra of G2.

A PBW monomial is a 14-tuple of exponents in the standard order
(m1..m6 for E-1..E-6, n1..n6 for E1..E6, k1, k2 for H1, H2).  Polynomials
are sparse dicts ``monomial -> coefficient``; coefficients are anything
that supports ``+``, ``*`` and truthiness (``FieldElement``, ``ParamPoly``).

Two independent reordering routes are provided:

* :func:`left_mul` moves a generator through whole power blocks with the
  closed-form power commutators (fast path, memoised);
* :func:`bubble_order` swaps adjacent letters one at a time using only the
  degree-one bracket (reference oracle).
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .exactfield import ONE, FieldElement, parse_field, q, render
from .g2core import (
    CARTAN_GENS,
    Gen,
    bracket,
    gen_of_root,
    inner_product,
    root_of,
    structure_constant,
)

__all__ = [
    "Monomial",
    "IDENTITY",
    "PBWPolynomial",
    "GeneratorWord",
    "IdealSpec",
    "unit",
    "mono",
    "power_commutator",
    "left_mul",
    "left_mul_poly",
    "normal_order",
    "bubble_order",
    "multiply",
    "ideal_reduce",
    "disorder",
    "poly_add",
    "poly_scale",
    "poly_sub",
    "parse_word",
    "parse_polynomial",
    "format_polynomial",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Monomial = tuple  # 14 non-negative ints
Poly = dict  # Monomial -> coefficient

NGEN = 14
IDENTITY: Monomial = (0,) * NGEN


def mono(**exps) -> Monomial:
    """Build a monomial from keywords ``m1..m6, n1..n6, k1, k2``."""
    out = [0] * NGEN
    for name, e in exps.items():
        kind, i = name[0], int(name[1:])
        idx = {"m": i - 1, "n": 5 + i, "k": 11 + i}[kind]
        out[idx] = e
    return tuple(out)


def unit(g: Gen, power: int = 1) -> Monomial:
    out = [0] * NGEN
    out[g] = power
    return tuple(out)


# -- sparse polynomial helpers ---------------------------------------------


def poly_add_into(acc: Poly, p: Poly, scale=None) -> None:
    for k, v in p.items():
        if scale is not None:
            v = v * scale
        s = acc.get(k)
        s = v if s is None else s + v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def poly_add(*ps: Poly) -> Poly:
    acc: Poly = {}
    for p in ps:
        poly_add_into(acc, p)
    return acc


def poly_scale(p: Poly, c) -> Poly:
    out = {}
    for k, v in p.items():
        w = v * c
        if w:
            out[k] = w
    return out


def poly_sub(p: Poly, r: Poly) -> Poly:
    acc = dict(p)
    poly_add_into(acc, r, -1)
    return acc


# -- power commutators ---------------------------------------------------------


def _ad_chain(x: Gen, beta: Gen, m: int):
    """(ad^R_{E_beta})^m applied to E_x as (generator, coeff), or None if zero.

    Only used when x is not -beta; the chain stays in root vectors.
    """
    coeff = ONE
    cur = root_of(x)
    b = root_of(beta)
    for _ in range(m):
        g = gen_of_root(cur)
        nxt = gen_of_root(cur + b)
        if g is None or nxt is None:
            return None
        coeff = coeff * structure_constant(g.signed_index, beta.signed_index)
        cur = cur + b
    return gen_of_root(cur), coeff


@lru_cache(maxsize=None)
def _power_commutator_terms(x: Gen, beta: Gen, n: int):
    """[x, E_beta^n] = sum of coeff * E_beta^(power) * middle.

    Returns tuples ``(power, middle_gen_or_None, coeff)``.
    """
    terms = []
    if beta.is_cartan:
        # only [H2, H1^n] = 0 occurs: H sorts last
        if x.is_cartan:
            return ()
        raise ValueError("root vector moved through a Cartan power")
    if x.is_cartan:
        c = root_of(beta)[x.index - 1] * n
        if c:
            terms.append((n, None, c))
        return tuple(terms)
    a = root_of(x)
    if (a + root_of(beta)).is_zero():
        for h in CARTAN_GENS:
            c = a[h.index - 1] * n
            if c:
                terms.append((n - 1, h, c))
        c = inner_product(a, -a) * q(n * (n - 1), 2)
        if c:
            terms.append((n - 1, None, c))
        return tuple(terms)
    for m in range(1, n + 1):
        chain = _ad_chain(x, beta, m)
        if chain is None:
            break
        g, c = chain
        terms.append((n - m, g, c * comb(n, m)))
    return tuple(terms)


def power_commutator(x: Gen, beta: Gen, n: int) -> Poly:
    """[x, E_beta^n] as a standard-ordered polynomial."""
    if n < 1:
        raise ValueError("power must be positive")
    if not beta.is_root:
        raise ValueError("beta must be a root generator")
    out: Poly = {}
    for power, mid, c in _power_commutator_terms(Gen(x), Gen(beta), n):
        inner = {IDENTITY: ONE} if mid is None else {unit(mid): ONE}
        poly_add_into(out, _left_mul_power_poly(beta, power, inner), c)
    return out


# -- fast left multiplication ----------------------------------------------------


def _first(m: Monomial) -> int:
    for i, e in enumerate(m):
        if e:
            return i
    return NGEN


_LEFT_CACHE: dict = {}


def left_mul(g: Gen, m: Monomial) -> Poly:
    """g * X(m) in standard order.  The returned dict must not be mutated."""
    key = (g, m)
    hit = _LEFT_CACHE.get(key)
    if hit is not None:
        return hit
    f = _first(m)
    if g <= f:
        out = list(m)
        out[g] += 1
        res = {tuple(out): ONE}
        _LEFT_CACHE[key] = res
        return res
    e = m[f]
    rest = list(m)
    rest[f] = 0
    rest = tuple(rest)
    fgen = Gen(f)
    # g f^e rest = f^e (g rest) + [g, f^e] rest
    res: Poly = {}
    poly_add_into(res, _left_mul_power_poly(fgen, e, left_mul(g, rest)))
    for power, mid, c in _power_commutator_terms(g, fgen, e):
        inner = {rest: ONE} if mid is None else left_mul(mid, rest)
        poly_add_into(res, _left_mul_power_poly(fgen, power, inner), c)
    _LEFT_CACHE[key] = res
    return res


def left_mul_poly(g: Gen, p: Poly) -> Poly:
    out: Poly = {}
    for m, c in p.items():
        poly_add_into(out, left_mul(g, m), c)
    return out


def _left_mul_power_poly(g: Gen, power: int, p: Poly) -> Poly:
    if power == 0:
        return p
    out: Poly = {}
    slow: Poly = {}
    for m, c in p.items():
        if g <= _first(m):
            nm = list(m)
            nm[g] += power
            poly_add_into(out, {tuple(nm): c})
        else:
            slow[m] = c
    for _ in range(power):
        if not slow:
            break
        slow = left_mul_poly(g, slow)
    poly_add_into(out, slow)
    return out


def clear_cache() -> None:
    _LEFT_CACHE.clear()
    _bubble_word.cache_clear()


# -- words and normal ordering -----------------------------------------------


@dataclass(frozen=True)
class GeneratorWord:
    """An unordered product of generator powers, read left to right."""

    factors: tuple[tuple[Gen, int], ...]

    def __post_init__(self):
        for g, p in self.factors:
            if p < 1:
                raise ValueError("powers in a word must be positive")

    @classmethod
    def of(cls, *factors) -> GeneratorWord:
        out = []
        for f in factors:
            if isinstance(f, tuple):
                out.append((Gen(f[0]), int(f[1])))
            else:
                out.append((Gen(f), 1))
        return cls(tuple(out))

    def letters(self) -> tuple[Gen, ...]:
        return tuple(g for g, p in self.factors for _ in range(p))

    def degree(self) -> int:
        return sum(p for _, p in self.factors)

    def __str__(self) -> str:
        return format_word(self.factors)


def disorder(letters) -> int:
    """Number of out-of-order letter pairs; strictly drops under each rewrite."""
    n = 0
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            if letters[i] > letters[j]:
                n += 1
    return n


def normal_order(w: GeneratorWord, method: str = "fast") -> Poly:
    """Standard-ordered polynomial equal to the word ``w``."""
    if method == "bubble":
        return bubble_order(w.letters())
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    p: Poly = {IDENTITY: ONE}
    for g, power in reversed(w.factors):
        p = _left_mul_power_poly(g, power, p)
    return dict(p)


def _letters_to_monomial(letters) -> Monomial:
    out = [0] * NGEN
    for g in letters:
        out[g] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _bubble_word(letters: tuple) -> tuple:
    for i in range(len(letters) - 1):
        x, y = letters[i], letters[i + 1]
        if x > y:
            acc: Poly = {}
            swapped = letters[:i] + (y, x) + letters[i + 2:]
            poly_add_into(acc, dict(_bubble_word(swapped)))
            for z, c in bracket(Gen(x), Gen(y)).items():
                shorter = letters[:i] + (int(z),) + letters[i + 2:]
                poly_add_into(acc, dict(_bubble_word(shorter)), c)
            return tuple(acc.items())
    return ((_letters_to_monomial(letters), ONE),)


def bubble_order(letters) -> Poly:
    """Reference normal ordering by adjacent swaps ``xy = yx + [x, y]``."""
    return dict(_bubble_word(tuple(int(g) for g in letters)))


def monomial_letters(m: Monomial) -> tuple[Gen, ...]:
    return tuple(Gen(i) for i, e in enumerate(m) for _ in range(e))


def monomial_factors(m: Monomial) -> tuple[tuple[Gen, int], ...]:
    return tuple((Gen(i), e) for i, e in enumerate(m) if e)


def multiply(p: Poly, r: Poly) -> Poly:
    """Product in the enveloping algebra, normal ordered."""
    out: Poly = {}
    for m, c in p.items():
        cur = r
        for g, e in reversed(monomial_factors(m)):
            cur = _left_mul_power_poly(g, e, cur)
        poly_add_into(out, cur, c)
    return out


# -- invariant subspaces -----------------------------------------------------


@dataclass(frozen=True)
class IdealSpec:
    """Caps defining a sum of the invariant subspaces V_K1, ..., V_N15.

    A monomial lies in the subspace when any capped quantity reaches its cap:
    k1, k2, n5, n6, n4+n5 or n1+n2+2*n3+n4+n5.
    """

    K1: int | None = None
    K2: int | None = None
    N5: int | None = None
    N6: int | None = None
    N45: int | None = None
    N15: int | None = None

    def caps(self) -> dict[str, int]:
        return {k: v for k, v in self.__dict__.items() if v is not None}

    def contains(self, m: Monomial) -> bool:
        n1, n2, n3, n4, n5, n6 = m[6:12]
        k1, k2 = m[12], m[13]
        checks = (
            (self.K1, k1),
            (self.K2, k2),
            (self.N5, n5),
            (self.N6, n6),
            (self.N45, n4 + n5),
            (self.N15, n1 + n2 + 2 * n3 + n4 + n5),
        )
        return any(cap is not None and val >= cap for cap, val in checks)

    def removed_generators(self) -> set[Gen]:
        """Generators that cannot appear in the quotient basis (all caps = 1)."""
        out = set()
        for g in Gen:
            if self.contains(unit(g)):
                out.add(g)
        return out

    def boson_count(self) -> int:
        return NGEN - len(self.removed_generators())


def ideal_reduce(p: Poly, spec: IdealSpec) -> Poly:
    """Drop every term lying in the invariant subspace described by ``spec``."""
    return {m: c for m, c in p.items() if not spec.contains(m)}


# -- text formats ----------------------------------------------------------------


def format_word(factors) -> str:
    if not factors:
        return "1"
    parts = []
    for g, e in factors:
        parts.append(g.label if e == 1 else f"{g.label}^{e}")
    return "*".join(parts)


def format_monomial(m: Monomial) -> str:
    return format_word(monomial_factors(m))


def format_polynomial(p: Poly) -> str:
    """``[coeff] word + [coeff] word`` with monomials in lexicographic order."""
    if not p:
        return "0"
    return " + ".join(f"[{render(p[m]) if isinstance(p[m], FieldElement) else p[m]}] {format_monomial(m)}"
                      for m in sorted(p))


_FACTOR = re.compile(r"^(E[+-]?\d|H\d)(?:\^(\d+))?$", re.IGNORECASE)


def parse_word(text: str) -> GeneratorWord:
    """Parse ``E-6^2*E-1`` (``*`` or whitespace separated); ``1`` is the empty word."""
    from .g2core import parse_gen

    t = text.strip()
    if t in ("", "1"):
        return GeneratorWord(())
    factors = []
    for tok in re.split(r"[*\s]+", t):
        if not tok:
            continue
        m = _FACTOR.match(tok)
        if not m:
            raise ValueError(f"bad word factor {tok!r}")
        factors.append((parse_gen(m.group(1)), int(m.group(2) or 1)))
    return GeneratorWord(tuple(factors))


def parse_polynomial(text: str) -> Poly:
    """Parse the output of :func:`format_polynomial`, or a bare word."""
    t = text.strip()
    if t == "0":
        return {}
    if not t.startswith("["):
        return normal_order(parse_word(t))
    out: Poly = {}
    pos = 0
    while pos < len(t):
        if t[pos] != "[":
            raise ValueError(f"expected '[' at {t[pos:]!r}")
        close = t.index("]", pos)
        c = parse_field(t[pos + 1:close])
        nxt = t.find(" + [", close)
        end = len(t) if nxt < 0 else nxt
        w = parse_word(t[close + 1:end])
        poly_add_into(out, normal_order(w), c)
        pos = end + 3 if nxt >= 0 else end
    return out


@dataclass
class PBWPolynomial:
    """Thin wrapper over the sparse dict, with algebra operators."""

    terms: dict = field(default_factory=dict)

    @classmethod
    def one(cls) -> PBWPolynomial:
        return cls({IDENTITY: ONE})

    @classmethod
    def gen(cls, g: Gen, power: int = 1) -> PBWPolynomial:
        return cls({unit(g, power): ONE})

    def __add__(self, other: PBWPolynomial) -> PBWPolynomial:
        return PBWPolynomial(poly_add(self.terms, other.terms))

    def __sub__(self, other: PBWPolynomial) -> PBWPolynomial:
        return PBWPolynomial(poly_sub(self.terms, other.terms))

    def __neg__(self) -> PBWPolynomial:
        return PBWPolynomial(poly_scale(self.terms, -1))

    def __mul__(self, other) -> PBWPolynomial:
        if isinstance(other, PBWPolynomial):
            return PBWPolynomial(multiply(self.terms, other.terms))
        return PBWPolynomial(poly_scale(self.terms, other))

    def __rmul__(self, other) -> PBWPolynomial:
        return PBWPolynomial(poly_scale(self.terms, other))

    def __eq__(self, other) -> bool:
        if isinstance(other, PBWPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_polynomial(self.terms)
