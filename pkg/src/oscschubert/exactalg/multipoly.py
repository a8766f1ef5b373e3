"""Sparse multivariate polynomials over Q or Q(i).

A :class:`MultiPoly` maps exponent tuples (aligned with an ordered tuple of
variable names) to nonzero coefficients.  Terms are listed in lexicographic
order with the first variable largest; the order of the variable tuple is
owned by whoever builds the polynomial (a chart, a solver), not by the
polynomial itself.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .numbers import GaussianRational, Rational, as_rational

__all__ = ["MultiPoly", "split_real_imaginary", "parse_poly"]


def _is_coeff(x) -> bool:
    return isinstance(x, (Rational, GaussianRational, int))


def _norm_coeff(c):
    if isinstance(c, GaussianRational):
        return c if c.im else c.re
    return as_rational(c)


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nv:
                    raise ValueError(f"exponent {e} does not match variables {self.variables}")
                c = _norm_coeff(c)
                if c:
                    clean[e] = _norm_coeff(clean.get(e, 0) + c)
                    if not clean[e]:
                        del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "MultiPoly":
        variables = tuple(variables)
        c = _norm_coeff(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls._raw(variables, {tuple(e): mpq(1)})

    @classmethod
    def from_unipoly(cls, p, var: str = "t") -> "MultiPoly":
        return cls._raw((var,), {(i,): c for i, c in enumerate(p.coeffs) if c})

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), mpq(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used_variables(self) -> tuple:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return tuple(self.variables[i] for i in sorted(used))

    def is_rational(self) -> bool:
        return all(not isinstance(c, GaussianRational) for c in self.terms.values())

    def leading_term(self):
        """(exponent, coefficient) of the lex-largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                return self.terms == other.with_variables(self.variables).terms
            return self.terms == other.terms
        if _is_coeff(other):
            return self.terms == MultiPoly.constant(self.variables, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- ring operations --------------------------------------------------
    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        return MultiPoly.constant(self.variables, other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = _norm_coeff(s) if isinstance(s, GaussianRational) else s
                else:
                    del out[e]
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _norm_coeff(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly._raw(
                self.variables, {e: _norm_coeff(v * c) for e, v in self.terms.items()}
            )
        o = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            raise TypeError("use exact polynomial division helpers, not '/'")
        inv = 1 / _norm_coeff(c) if not isinstance(c, GaussianRational) else GaussianRational(1) / c
        return self * inv

    # -- transformations ----------------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-embed into a (super)set of variables, possibly reordered."""
        variables = tuple(variables)
        idx = []
        for i, name in enumerate(self.variables):
            if name in variables:
                idx.append(variables.index(name))
            else:
                idx.append(None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, x in enumerate(e):
                if x:
                    if idx[i] is None:
                        raise ValueError(f"variable {self.variables[i]} missing from target list")
                    ne[idx[i]] = x
            out[tuple(ne)] = c
        return MultiPoly._raw(variables, out)

    def substitute(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute constants or same-ring polynomials for some variables."""
        powers_cache: dict = {}

        def power(name, k):
            key = (name, k)
            if key not in powers_cache:
                v = values[name]
                if isinstance(v, MultiPoly):
                    powers_cache[key] = v ** k
                else:
                    powers_cache[key] = _norm_coeff(v) ** k if not isinstance(v, GaussianRational) else v ** k
            return powers_cache[key]

        result = MultiPoly.zero(self.variables)
        sub_idx = [i for i, name in enumerate(self.variables) if name in values]
        grouped: dict = {}
        for e, c in self.terms.items():
            rest = list(e)
            key = tuple(e[i] for i in sub_idx)
            for i in sub_idx:
                rest[i] = 0
            grouped.setdefault(key, {})[tuple(rest)] = c
        for key, terms in grouped.items():
            part = MultiPoly._raw(self.variables, terms)
            factor = None
            scalar = mpq(1)
            for i, k in zip(sub_idx, key):
                if not k:
                    continue
                val = power(self.variables[i], k)
                if isinstance(val, MultiPoly):
                    factor = val if factor is None else factor * val
                else:
                    scalar = scalar * val
            part = part * scalar
            if factor is not None:
                part = part * factor
            result = result + part
        return result

    def evaluate(self, values: Mapping[str, object]):
        """Full evaluation; every variable that occurs must be supplied."""
        total = mpq(0)
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.variables, e):
                if k:
                    term = term * (values[name] ** k)
            total = total + term
        return _norm_coeff(total) if isinstance(total, GaussianRational) else total

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def conjugate(self) -> "MultiPoly":
        return self.map_coefficients(
            lambda c: c.conjugate() if isinstance(c, GaussianRational) else c
        )

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self / self.leading_term()[1]

    def to_unipoly(self, name: str | None = None):
        """Convert a polynomial in at most one variable to :class:`UniPoly`."""
        from .unipoly import UniPoly

        used = self.used_variables()
        if len(used) > 1 or (name is not None and used and used[0] != name):
            raise ValueError(f"polynomial is not univariate in {name or used}")
        if not self.is_rational():
            raise ValueError("univariate conversion needs rational coefficients")
        i = self.variables.index(used[0]) if used else 0
        deg = max((e[i] for e in self.terms), default=-1) if used else 0
        coeffs = [mpq(0)] * (deg + 1)
        for e, c in self.terms.items():
            coeffs[e[i] if used else 0] = c
        return UniPoly(coeffs)

    def derivative(self, name: str) -> "MultiPoly":
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self.variables, out)

    # -- text ---------------------------------------------------------------
    def to_text(self) -> str:
        """Canonical form: lex-descending monomials, explicit signs, ``^`` powers."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.variables, e) if k
            )
            if isinstance(c, GaussianRational):
                cs = f"({c})"
                neg = False
            else:
                neg = c < 0
                cs = str(-c if neg else c)
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.variables}, {self.to_text()!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse the canonical text form (rational coefficients only)."""
    variables = tuple(variables)
    s = text.strip()
    if s == "0":
        return MultiPoly.zero(variables)
    terms = {}
    s = s.replace(" ", "")
    for m in _TERM_RE.finditer(s):
        if not m.group(2):
            continue
        sign = -1 if m.group(1) == "-" else 1
        coeff = mpq(sign)
        exps = [0] * len(variables)
        for factor in m.group(2).split("*"):
            if factor in variables or "^" in factor:
                name, _, k = factor.partition("^")
                exps[variables.index(name)] += int(k) if k else 1
            else:
                coeff *= mpq(factor)
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + coeff
    return MultiPoly(variables, terms)


def split_real_imaginary(p: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """(Re p, Im p) over Q, taking real and imaginary parts coefficientwise."""
    re_terms, im_terms = {}, {}
    for e, c in p.terms.items():
        if isinstance(c, GaussianRational):
            if c.re:
                re_terms[e] = c.re
            if c.im:
                im_terms[e] = c.im
        else:
            re_terms[e] = c
    return MultiPoly._raw(p.variables, re_terms), MultiPoly._raw(p.variables, im_terms)
