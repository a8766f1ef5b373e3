"""Dense univariate polynomials over Q."""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .numbers import Rational, as_rational

__all__ = ["UniPoly", "squarefree_part", "poly_gcd"]


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class UniPoly:
    """Polynomial ``sum(c[i] * t**i)`` with exact rational coefficients.

    Coefficients are stored lowest degree first; the zero polynomial has an
    empty coefficient list and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: list) -> "UniPoly":
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def __getitem__(self, i: int) -> Rational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else mpq(0)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, int) else mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ------------------------------------------------
    @staticmethod
    def _lift(x) -> "UniPoly":
        return x if isinstance(x, UniPoly) else UniPoly([x])

    def __add__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly()
        out = [mpq(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = as_rational(c)
        return UniPoly._raw([c * x for x in self.coeffs])

    def __divmod__(self, other):
        d = self._lift(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) - 1 < dd:
            return UniPoly(), UniPoly._raw(rem)
        inv_lc = 1 / d.coeffs[-1]
        quot = [mpq(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] * inv_lc
            quot[k] = q
            if q:
                for j in range(dd + 1):
                    rem[k + j] -= q * d.coeffs[j]
        return UniPoly._raw(quot), UniPoly._raw(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- calculus / normal forms ------------------------------------------
    def derivative(self) -> "UniPoly":
        return UniPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.coeffs[-1])

    def shift(self, a) -> "UniPoly":
        """Return ``p(t + a)``."""
        a = as_rational(a)
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * UniPoly([a, 1]) + c
        return out

    def taylor_coefficients(self, a) -> list:
        return list(self.shift(a).coeffs)

    def to_text(self, var: str = "t") -> str:
        from .multipoly import MultiPoly

        return MultiPoly.from_unipoly(self, var).to_text()

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"UniPoly({self.to_text()!r})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """``p / gcd(p, p')``, made monic: same roots as ``p``, all simple."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def as_unipoly(x: Sequence | UniPoly) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly(x)
