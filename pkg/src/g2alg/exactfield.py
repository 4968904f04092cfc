"""Exact arithmetic in Q(sqrt2, sqrt3).

Elements are stored as ``(a, b, c, d) / den`` meaning
``(a + b*sqrt2 + c*sqrt3 + d*sqrt6) / den`` with integer numerators and a
positive common denominator kept in lowest terms, so equality is tuple
equality.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

__all__ = [
    "FieldElement",
    "ZERO",
    "ONE",
    "R2",
    "R3",
    "R6",
    "F",
    "q",
    "parse_field",
]

Scalar = Union[int, Fraction, "FieldElement"]


def _normalize(a: int, b: int, c: int, d: int, den: int):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        a, b, c, d, den = -a, -b, -c, -d, -den
    g = gcd(gcd(gcd(a, b), gcd(c, d)), den)
    if g > 1:
        a, b, c, d, den = a // g, b // g, c // g, d // g, den // g
    if a == b == c == d == 0:
        den = 1
    return a, b, c, d, den


class FieldElement:
    """An element of Q(sqrt2, sqrt3) on the basis {1, sqrt2, sqrt3, sqrt6}."""

    __slots__ = ("_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0, den: int = 1):
        self._a, self._b, self._c, self._d, self._den = _normalize(a, b, c, d, den)
        self._hash = None

    @classmethod
    def _raw(cls, a, b, c, d, den) -> FieldElement:
        obj = cls.__new__(cls)
        obj._a, obj._b, obj._c, obj._d, obj._den = _normalize(a, b, c, d, den)
        obj._hash = None
        return obj

    @classmethod
    def from_coords(cls, c0, c2=0, c3=0, c6=0) -> FieldElement:
        """Build ``c0 + c2*sqrt2 + c3*sqrt3 + c6*sqrt6`` from rationals."""
        fr = [Fraction(x) for x in (c0, c2, c3, c6)]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        nums = [x.numerator * (den // x.denominator) for x in fr]
        return cls._raw(*nums, den)

    @classmethod
    def coerce(cls, x) -> FieldElement:
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 0, 0, 1)
        if isinstance(x, Rational):
            return cls._raw(int(x.numerator), 0, 0, 0, int(x.denominator))
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElement")

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        den = self._den
        return (
            Fraction(self._a, den),
            Fraction(self._b, den),
            Fraction(self._c, den),
            Fraction(self._d, den),
        )

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0 and self._c == 0 and self._d == 0

    def is_rational(self) -> bool:
        return self._b == 0 and self._c == 0 and self._d == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return Fraction(self._a, self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            try:
                other = FieldElement.coerce(other)
            except TypeError:
                return NotImplemented
        return (self._a, self._b, self._c, self._d, self._den) == (
            other._a,
            other._b,
            other._c,
            other._d,
            other._den,
        )

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                # agree with hash(Fraction) / hash(int)
                self._hash = hash(Fraction(self._a, self._den))
            else:
                self._hash = hash((self._a, self._b, self._c, self._d, self._den))
        return self._hash

    # ring operations

    def __neg__(self) -> FieldElement:
        return FieldElement._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __pos__(self) -> FieldElement:
        return self

    def __add__(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            if isinstance(other, (int, Rational)):
                other = FieldElement.coerce(other)
            else:
                return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return FieldElement._raw(
                self._a + other._a, self._b + other._b, self._c + other._c, self._d + other._d, d1
            )
        return FieldElement._raw(
            self._a * d2 + other._a * d1,
            self._b * d2 + other._b * d1,
            self._c * d2 + other._c * d1,
            self._d * d2 + other._d * d1,
            d1 * d2,
        )

    __radd__ = __add__

    def __sub__(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            if isinstance(other, (int, Rational)):
                other = FieldElement.coerce(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> FieldElement:
        return (-self) + other

    def __mul__(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return FieldElement._raw(
                    self._a * other, self._b * other, self._c * other, self._d * other, self._den
                )
            if isinstance(other, Rational):
                other = FieldElement.coerce(other)
            else:
                return NotImplemented
        a, b, c, d = self._a, self._b, self._c, self._d
        e, f, g, h = other._a, other._b, other._c, other._d
        return FieldElement._raw(
            a * e + 2 * b * f + 3 * c * g + 6 * d * h,
            a * f + b * e + 3 * (c * h + d * g),
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
            self._den * other._den,
        )

    __rmul__ = __mul__

    def conjugate(self, flip2: bool, flip3: bool) -> FieldElement:
        """Galois conjugate sending sqrt2 -> -sqrt2 and/or sqrt3 -> -sqrt3."""
        s2 = -1 if flip2 else 1
        s3 = -1 if flip3 else 1
        return FieldElement._raw(self._a, s2 * self._b, s3 * self._c, s2 * s3 * self._d, self._den)

    def norm(self) -> Fraction:
        """Field norm down to Q (product of the four conjugates)."""
        p = self * self.conjugate(True, False) * self.conjugate(False, True) * self.conjugate(True, True)
        return p.to_fraction()

    def inv(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        others = self.conjugate(True, False) * self.conjugate(False, True) * self.conjugate(True, True)
        n = (self * others).to_fraction()
        return others * Fraction(n.denominator, n.numerator)

    def __truediv__(self, other) -> FieldElement:
        if not isinstance(other, FieldElement):
            if isinstance(other, (int, Rational)):
                other = FieldElement.coerce(other)
            else:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> FieldElement:
        return FieldElement.coerce(other) * self.inv()

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # rendering

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"F({render(self)!r})"

    def to_decimal(self, digits: int = 30) -> Decimal:
        """Decimal approximation, for display only."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            r2 = Decimal(2).sqrt()
            r3 = Decimal(3).sqrt()
            r6 = Decimal(6).sqrt()
            v = (Decimal(self._a) + Decimal(self._b) * r2 + Decimal(self._c) * r3 + Decimal(self._d) * r6) / Decimal(
                self._den
            )
            ctx.prec = digits
            return +v

    def __float__(self) -> float:
        return float(self.to_decimal(20))

    def decimal_str(self, sig: int = 15) -> str:
        v = self.to_decimal(sig + 5)
        return f"{v:.{sig}g}" if v != 0 else "0"


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render(x: FieldElement) -> str:
    """Canonical text ``a + b*r2 + c*r3 + d*r6`` with zero terms omitted."""
    parts = []
    for coeff, sym in zip(x.coords, ("", "r2", "r3", "r6")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if sym:
            body = sym if mag == 1 else f"{_frac_text(mag)}*{sym}"
        else:
            body = _frac_text(mag)
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"""\s*([+-]?)\s*
        (?:(\d+)(?:/(\d+))?\s*(?:\*\s*(r2|r3|r6))?
          |(r2|r3|r6))
        \s*""",
    re.VERBOSE,
)


def parse_field(text: str) -> FieldElement:
    """Parse the textual form produced by :func:`render`.

    Accepts any sum of terms ``[+-] p[/q][*rK]`` or ``[+-] rK``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty field element")
    pos = 0
    coords = {"": Fraction(0), "r2": Fraction(0), "r3": Fraction(0), "r6": Fraction(0)}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse field element {text!r} at {s[pos:]!r}")
        sign, num, den, sym1, sym2 = m.groups()
        if not first and not sign:
            raise ValueError(f"missing operator in {text!r}")
        first = False
        if sym2:
            val, sym = Fraction(1), sym2
        else:
            val = Fraction(int(num), int(den) if den else 1)
            sym = sym1 or ""
        coords[sym] += -val if sign == "-" else val
        pos = m.end()
    return FieldElement.from_coords(coords[""], coords["r2"], coords["r3"], coords["r6"])


def q(num: int, den: int = 1) -> FieldElement:
    """Rational shortcut ``num/den``."""
    return FieldElement._raw(num, 0, 0, 0, den)


def F(x) -> FieldElement:
    """Coerce ints, Fractions or field text to a FieldElement."""
    if isinstance(x, str):
        return parse_field(x)
    return FieldElement.coerce(x)


ZERO = FieldElement()
ONE = FieldElement(1)
R2 = FieldElement(0, 1)
R3 = FieldElement(0, 0, 1)
R6 = FieldElement(0, 0, 0, 1)
