"""Conversion of a zero-dimensional grevlex basis to the reduced lex basis (FGLM)."""

from __future__ import annotations

import heapq

from gmpy2 import mpq

from ..errors import DegeneracyError, ResourceError
from ..exactalg import MultiPoly
from .buchberger import Budgets, MonomialCodec, PolySystem, _buchberger, _Poly, reduce_poly

__all__ = ["fglm", "lex_basis", "quotient_dimension", "STRATEGIES"]

STRATEGIES = ("fglm", "lex")
MAX_QUOTIENT_DIM = 5000


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _check_zero_dimensional(basis: list[_Poly], codec: MonomialCodec):
    leads = [codec.unpack(p.lm) for p in basis]
    for i in range(codec.nvars):
        if not any(e[i] > 0 and sum(e) == e[i] for e in leads):
            raise DegeneracyError(f"positive-dimensional ideal: no leading monomial is a power of variable {i}")


def quotient_dimension(basis: list[_Poly], codec: MonomialCodec) -> int:
    """Number of standard monomials (solutions counted with multiplicity)."""
    if any(p.lm == codec.one for p in basis):
        return 0
    _check_zero_dimensional(basis, codec)
    leads = [codec.unpack(p.lm) for p in basis]
    n = codec.nvars
    count = 0
    stack = [(0,) * n]
    seen = {stack[0]}
    while stack:
        m = stack.pop()
        if any(_divides(l, m) for l in leads):
            continue
        count += 1
        if count > MAX_QUOTIENT_DIM:
            raise ResourceError(f"quotient dimension exceeds {MAX_QUOTIENT_DIM}", dimension=count)
        for i in range(n):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return count


def fglm(basis: list[_Poly], codec: MonomialCodec, max_terms: int = 10**6) -> list[dict]:
    """Reduced lex basis (as ``{exponents: coeff}`` dicts) of a zero-dimensional ideal.

    ``basis`` is a reduced Groebner basis for ``codec``'s order. Monomials are
    visited in increasing lex order; each normal form is tested for linear
    dependence on the normal forms of the lex standard monomials found so far.
    """
    n = codec.nvars
    if any(p.lm == codec.one for p in basis):
        return [{(0,) * n: mpq(1)}]
    _check_zero_dimensional(basis, codec)
    unit = [codec.pack(tuple(1 if j == i else 0 for j in range(n))) - codec.one for i in range(n)]

    start = (0,) * n
    normal = {start: {codec.one: mpq(1)}}
    heap = [start]
    queued = {start}
    standard: list[tuple] = []
    rows: list[tuple] = []  # (pivot, vector, combination over standard monomials)
    leads: list[tuple] = []
    out: list[dict] = []
    while heap:
        m = heapq.heappop(heap)
        if any(_divides(l, m) for l in leads):
            continue
        original = normal.pop(m)
        vec = dict(original)
        combo: dict = {}
        for pivot, rvec, rcombo in rows:
            c = vec.get(pivot)
            if not c:
                continue
            for key, val in rvec.items():
                nv = vec.get(key, 0) - c * val
                if nv:
                    vec[key] = nv
                else:
                    vec.pop(key, None)
            for j, val in rcombo.items():
                nv = combo.get(j, 0) + c * val
                if nv:
                    combo[j] = nv
                else:
                    combo.pop(j, None)
        if not vec:
            # m = sum combo[j] * standard[j] in the quotient
            poly = {m: mpq(1)}
            for j, c in combo.items():
                poly[standard[j]] = -c
            leads.append(m)
            out.append(poly)
            continue
        idx = len(standard)
        standard.append(m)
        if idx >= MAX_QUOTIENT_DIM:
            raise ResourceError(f"quotient dimension exceeds {MAX_QUOTIENT_DIM}", dimension=idx)
        pivot = max(vec)
        inv = 1 / vec[pivot]
        rvec = {k: v * inv for k, v in vec.items()}
        rcombo = {j: -v * inv for j, v in combo.items()}
        rcombo[idx] = inv
        rows.append((pivot, rvec, rcombo))
        for i in range(n):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt in queued:
                continue
            queued.add(nxt)
            shifted = {k + unit[i]: v for k, v in original.items()}
            normal[nxt] = reduce_poly(shifted, basis, codec, max_terms)
            heapq.heappush(heap, nxt)
    out.sort(key=lambda p: max(p), reverse=True)
    return out


def lex_basis(system: PolySystem, strategy: str = "fglm", budgets: Budgets | None = None, stats: dict | None = None) -> list[MultiPoly]:
    """Reduced lex basis of ``system``.

    ``"lex"`` runs Buchberger directly in the lex order; ``"fglm"`` runs it
    in grevlex and converts (zero-dimensional ideals only). Both return the
    same reduced basis.
    """
    variables = system.variables
    if strategy == "lex":
        codec = MonomialCodec(len(variables), "lex")
        polys = _buchberger(system, codec, budgets, stats)
        return [MultiPoly._raw(variables, {codec.unpack(m): c for m, c in p.terms.items()}) for p in polys]
    if strategy != "fglm":
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    codec = MonomialCodec(len(variables), "grevlex")
    polys = _buchberger(system, codec, budgets, stats)
    dicts = fglm(polys, codec, (budgets or Budgets()).max_terms)
    return [MultiPoly._raw(variables, d) for d in dicts]
