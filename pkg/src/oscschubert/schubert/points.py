"""Osculation points on the projective line and real projective changes of coordinates."""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from ..exactalg import GaussianRational, as_gaussian, as_rational

__all__ = ["OsculationPoint", "INF", "Mobius"]


@dataclass(frozen=True)
class OsculationPoint:
    """A point of P^1: a Gaussian rational, or infinity when ``value`` is None."""

    value: GaussianRational | None = None

    def __post_init__(self):
        if self.value is not None and not isinstance(self.value, GaussianRational):
            object.__setattr__(self, "value", as_gaussian(self.value))

    @classmethod
    def of(cls, x) -> "OsculationPoint":
        if isinstance(x, OsculationPoint):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        return cls(as_gaussian(x))

    @classmethod
    def parse(cls, text: str) -> "OsculationPoint":
        s = text.strip().lower()
        if s in ("inf", "infinity", "oo"):
            return INF
        return cls(GaussianRational.parse(s))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_real(self) -> bool:
        return self.value is None or self.value.is_real()

    def conjugate(self) -> "OsculationPoint":
        return self if self.value is None else OsculationPoint(self.value.conjugate())

    @property
    def real_value(self):
        if self.value is None or not self.value.is_real():
            raise ValueError(f"{self} is not a finite real point")
        return self.value.re

    def to_text(self) -> str:
        """``inf``, ``a/b`` or ``a/b+c/d*i`` (always with an explicit coefficient)."""
        if self.value is None:
            return "inf"
        v = self.value
        if v.is_real():
            return str(v.re)
        sign = "+" if v.im > 0 else "-"
        return f"{v.re}{sign}{abs(v.im)}*i"

    def __str__(self):
        return self.to_text()

    def sort_key(self):
        if self.value is None:
            return (1, 0, 0)
        return (0, self.value.re, self.value.im)


INF = OsculationPoint(None)


@dataclass(frozen=True)
class Mobius:
    """``t -> (a t + b) / (c t + d)`` with rational coefficients and ``ad - bc != 0``."""

    a: object = mpq(1)
    b: object = mpq(0)
    c: object = mpq(0)
    d: object = mpq(1)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("degenerate projective transformation")

    @classmethod
    def sending(cls, to_infinity: OsculationPoint, to_zero: OsculationPoint | None = None) -> "Mobius":
        """A real transformation taking ``to_infinity`` to oo and ``to_zero`` to 0."""
        p = to_infinity
        q = to_zero
        if not p.is_real or (q is not None and not q.is_real):
            raise ValueError("only real points can be moved by a real transformation")
        if q is None:
            if p.is_infinite:
                return cls()
            return cls(0, 1, 1, -p.real_value)  # 1/(t - p)
        if p.is_infinite and q.is_infinite:
            raise ValueError("points must be distinct")
        if p.is_infinite:
            return cls(1, -q.real_value, 0, 1)  # t - q
        if q.is_infinite:
            return cls(0, 1, 1, -p.real_value)  # 1/(t - p)
        return cls(1, -q.real_value, 1, -p.real_value)  # (t - q)/(t - p)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __call__(self, pt: OsculationPoint) -> OsculationPoint:
        if pt.is_infinite:
            if self.c == 0:
                return INF
            return OsculationPoint(GaussianRational(self.a / self.c))
        t = pt.value
        den = t * self.c + self.d
        if not den:
            return INF
        return OsculationPoint((t * self.a + self.b) / den)
