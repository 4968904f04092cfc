"""Polynomials in the highest-weight parameters L1, L2 over Q(sqrt2, sqrt3).

Used wherever the highest weight is kept symbolic, so an identity checked
with ``ParamPoly`` coefficients holds for every value of the weight.
"""

from __future__ import annotations

from numbers import Rational

from .exactfield import FieldElement, parse_field, render

__all__ = ["ParamPoly", "L1", "L2", "as_param"]


class ParamPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # (deg_L1, deg_L2) -> FieldElement, no zero entries
        self.terms: dict[tuple[int, int], FieldElement] = {}
        if terms:
            for k, v in terms.items():
                v = FieldElement.coerce(v)
                if v:
                    self.terms[k] = v

    @classmethod
    def constant(cls, c) -> ParamPoly:
        return cls({(0, 0): c})

    @staticmethod
    def _lift(x):
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, (FieldElement, int, Rational)):
            return ParamPoly.constant(x)
        return None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        o = ParamPoly._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        if not self.terms:
            return hash(0)
        if set(self.terms) == {(0, 0)}:
            return hash(self.terms[(0, 0)])
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> ParamPoly:
        out = ParamPoly()
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __add__(self, other) -> ParamPoly:
        o = ParamPoly._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = ParamPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other) -> ParamPoly:
        o = ParamPoly._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> ParamPoly:
        return (-self) + other

    def __mul__(self, other) -> ParamPoly:
        if isinstance(other, (FieldElement, int, Rational)):
            c = FieldElement.coerce(other)
            res = ParamPoly()
            if c:
                res.terms = {k: v * c for k, v in self.terms.items()}
            return res
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out: dict[tuple[int, int], FieldElement] = {}
        for (i, j), v in self.terms.items():
            for (k, l), w in other.terms.items():
                key = (i + k, j + l)
                s = out.get(key)
                s = v * w if s is None else s + v * w
                out[key] = s
        res = ParamPoly()
        res.terms = {k: v for k, v in out.items() if v}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ParamPoly:
        result = ParamPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, l1, l2) -> FieldElement:
        l1 = FieldElement.coerce(l1)
        l2 = FieldElement.coerce(l2)
        total = FieldElement()
        for (i, j), v in self.terms.items():
            total = total + v * (l1**i) * (l2**j)
        return total

    def is_constant(self) -> bool:
        return set(self.terms) <= {(0, 0)}

    def constant_term(self) -> FieldElement:
        return self.terms.get((0, 0), FieldElement())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            c = render(self.terms[(i, j)])
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("L1" if i == 1 else f"L1^{i}"),
                    "" if j == 0 else ("L2" if j == 1 else f"L2^{j}"),
                ) if s
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


def as_param(x) -> ParamPoly:
    """Lift a scalar, or the text produced by ``str(ParamPoly)``, to a ParamPoly."""
    if isinstance(x, str):
        out = ParamPoly()
        if x.strip() == "0":
            return out
        for part in x.split(" + "):
            part = part.strip()
            close = part.index(")")
            c = parse_field(part[1:close])
            i = j = 0
            for factor in filter(None, part[close + 1:].lstrip("*").split("*")):
                name, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if name == "L1":
                    i += e
                elif name == "L2":
                    j += e
                else:
                    raise ValueError(f"unknown parameter {name!r}")
            out = out + ParamPoly({(i, j): c})
        return out
    lifted = ParamPoly._lift(x)
    if lifted is None:
        raise TypeError(f"cannot lift {type(x).__name__}")
    return lifted


L1 = ParamPoly({(1, 0): 1})
L2 = ParamPoly({(0, 1): 1})
