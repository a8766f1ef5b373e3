"""Exact scalars: rationals (gmpy2 ``mpq``) and Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational as _RationalABC

import gmpy2
from gmpy2 import mpq

Rational = type(mpq(0))

__all__ = ["Rational", "GaussianRational", "QQ", "as_rational", "as_gaussian", "rational_text"]


def QQ(num, den=1) -> Rational:
    """Build an exact rational from ints, strings like ``"-3/4"``, or Fractions."""
    if den != 1:
        return mpq(num, den)
    return as_rational(num)


def as_rational(x) -> Rational:
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, (Integral, type(gmpy2.mpz(0)))):
        return mpq(int(x))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational literal")
        return mpq(s)
    if isinstance(x, _RationalABC):
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, GaussianRational):
        if x.im:
            raise ValueError(f"{x} is not real")
        return x.re
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rational_text(q: Rational) -> str:
    """``a`` or ``a/b`` in lowest terms."""
    return str(q)


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rational(re)
        self.im = as_rational(im)

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``a/b``, ``a/b+c/d*i``, ``c/d*i``, ``i`` or ``-i``."""
        s = text.replace(" ", "")
        if not s.endswith("i"):
            return cls(as_rational(s), 0)
        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(as_rational(re_part), as_rational(im_part.lstrip("+")))

    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        try:
            o = as_rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return not self.im and self.re == o

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        return GaussianRational(as_rational(other), 0)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational(a * c - b * d, a * d + b * c)
        try:
            o = as_rational(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o, self.im * o)

    __rmul__ = __mul__

    def norm(self) -> Rational:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._coerce(other)
        nrm = o.norm()
        if not nrm:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / nrm, num.im / nrm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (GaussianRational(1) / self) ** (-e)
        result = GaussianRational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "" if self.im == 1 else "-" if self.im == -1 else f"{self.im}*"
        if not self.re:
            return f"{im}i"
        sign = "" if self.im < 0 else "+"
        return f"{self.re}{sign}{im}i"

    def __repr__(self):
        return f"GaussianRational({self})"


def as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return GaussianRational.parse(x)
    return GaussianRational(as_rational(x), 0)
