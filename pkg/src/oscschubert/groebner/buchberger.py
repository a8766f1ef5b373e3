"""Lexicographic Buchberger algorithm over Q with packed monomials.

Monomials are packed into one Python int: variable 0 occupies the most
significant field, so comparing two packed monomials as integers is the
lexicographic order. Every field has a guard bit on top, which makes the
divisibility test a single subtraction: ``a | b`` iff
``((b | G) - a) & G == G``.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from ..errors import ResourceError
from ..exactalg import MultiPoly

__all__ = ["PolySystem", "Budgets", "MonomialCodec", "buchberger_lex", "reduce_poly", "normal_form", "groebner_basis"]


@dataclass(frozen=True)
class PolySystem:
    """Generators over an ordered variable list (the list fixes the lex order)."""

    variables: tuple
    generators: tuple

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        gens = []
        for g in self.generators:
            if not isinstance(g, MultiPoly):
                raise TypeError(f"generator {g!r} is not a MultiPoly")
            extra = set(g.used_variables()) - set(variables)
            if extra:
                raise ValueError(f"generator uses undeclared variables {sorted(extra)}")
            if not g.is_rational():
                raise ValueError("generators must have rational coefficients")
            gens.append(g.with_variables(variables))
        object.__setattr__(self, "generators", tuple(gens))

    def to_text(self) -> str:
        head = "vars: " + ", ".join(self.variables)
        return "\n".join([head] + [g.to_text() for g in self.generators])


@dataclass(frozen=True)
class Budgets:
    """Limits for one Groebner basis computation."""

    max_pairs: int = 200_000
    max_terms: int = 200_000
    max_seconds: float | None = None


class MonomialCodec:
    """Packs exponent vectors into ints whose integer order is the monomial order.

    ``lex``: one field per variable, variable 0 most significant.
    ``grevlex``: a total-degree field, then ``mask - a_i`` for the variables
    in reverse order, so a smaller exponent in the last variable wins ties.
    In both layouts the product of monomials is ``a + b - one``.
    """

    def __init__(self, nvars: int, order: str = "lex", width: int = 32):
        if order not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {order!r}")
        self.nvars = nvars
        self.order = order
        self.width = width
        self.mask = (1 << (width - 1)) - 1
        if order == "lex":
            self.shifts = [(nvars - 1 - i) * width for i in range(nvars)]
            self.deg_shift = None
        else:
            self.shifts = [i * width for i in range(nvars)]  # variable 0 least significant
            self.deg_shift = nvars * width
        self.guard = sum(1 << (s + width - 1) for s in self.shifts)
        self.field_mask = sum(self.mask << s for s in self.shifts)
        self.one = self.pack((0,) * nvars)

    def pack(self, exps: Sequence[int]) -> int:
        m = 0
        mask = self.mask
        for e, s in zip(exps, self.shifts):
            if e > mask:
                raise ResourceError(f"exponent {e} overflows the monomial field", exponent=e)
            m |= (e if self.deg_shift is None else mask - e) << s
        if self.deg_shift is not None:
            m |= sum(exps) << self.deg_shift
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        mask = self.mask
        if self.deg_shift is None:
            return tuple((m >> s) & mask for s in self.shifts)
        return tuple(mask - ((m >> s) & mask) for s in self.shifts)

    def divides(self, a: int, b: int) -> bool:
        G = self.guard
        if self.deg_shift is None:
            return ((b | G) - a) & G == G
        C = self.field_mask
        return (((a & C) | G) - (b & C)) & G == G

    def lcm(self, a: int, b: int) -> int:
        return self.pack([max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))])

    def disjoint(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.unpack(a), self.unpack(b)))

    def degree(self, m: int) -> int:
        if self.deg_shift is not None:
            return m >> self.deg_shift
        return sum(self.unpack(m))


class _Poly:
    __slots__ = ("terms", "lm", "sugar")

    def __init__(self, terms: dict, sugar: int):
        self.terms = terms
        self.lm = max(terms)
        self.sugar = sugar


def _make_monic(terms: dict) -> dict:
    lc = terms[max(terms)]
    if lc == 1:
        return terms
    inv = 1 / lc
    return {m: c * inv for m, c in terms.items()}


def reduce_poly(h: dict, basis: list, codec: MonomialCodec, max_terms: int) -> dict:
    """Full normal form of ``h`` (consumed) modulo monic polynomials ``basis``."""
    G = codec.guard
    lex = codec.deg_shift is None
    C = codec.field_mask
    if lex:
        divisors = [(p.lm, p.lm, p.terms) for p in basis]
    else:
        divisors = [(p.lm, (p.lm & C) | G, p.terms) for p in basis]
    heap = [-m for m in h]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        m = -heapq.heappop(heap)
        c = h.pop(m, None)
        if c is None:
            continue
        if lex:
            mg = m | G
        else:
            mc = m & C
        for lm, test, g in divisors:
            if (((mg - test) if lex else (test - mc)) & G) == G:
                q = m - lm
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    key = gm + q
                    v = h.get(key)
                    if v is None:
                        h[key] = -c * gc
                        heapq.heappush(heap, -key)
                    else:
                        v = v - c * gc
                        if v:
                            h[key] = v
                        else:
                            del h[key]
                if len(h) > max_terms:
                    raise ResourceError(
                        f"intermediate polynomial exceeded {max_terms} terms", terms=len(h)
                    )
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: _Poly, g: _Poly, lcm: int, codec: MonomialCodec) -> tuple[dict, int]:
    qf, qg = lcm - f.lm, lcm - g.lm
    out = {m + qf: c for m, c in f.terms.items() if m != f.lm}
    for m, c in g.terms.items():
        if m == g.lm:
            continue
        key = m + qg
        v = out.get(key)
        if v is None:
            out[key] = -c
        else:
            v = v - c
            if v:
                out[key] = v
            else:
                del out[key]
    deg = codec.degree(lcm)
    sugar = max(f.sugar + deg - codec.degree(f.lm), g.sugar + deg - codec.degree(g.lm))
    return out, sugar


def buchberger_lex(system: PolySystem, budgets: Budgets | None = None, stats: dict | None = None) -> list[MultiPoly]:
    """Reduced lex Groebner basis (monic, leading monomials descending)."""
    codec = MonomialCodec(len(system.variables), "lex")
    return [_to_multipoly(p, codec, system.variables) for p in _buchberger(system, codec, budgets, stats)]


def _to_multipoly(p: "_Poly", codec: MonomialCodec, variables) -> MultiPoly:
    return MultiPoly._raw(tuple(variables), {codec.unpack(m): c for m, c in p.terms.items()})


def _buchberger(system: PolySystem, codec: MonomialCodec, budgets: Budgets | None, stats: dict | None) -> list["_Poly"]:
    """Reduced basis for the codec's order; pairs by sugar, pruned by Gebauer-Moeller."""
    budgets = budgets or Budgets()
    start = time.monotonic()
    polys: list[_Poly] = []
    G: list[int] = []  # indices into polys
    pairs: list = []  # heap of (sugar, lcm, i, j)

    def update(h_idx: int):
        nonlocal G, pairs
        h = polys[h_idx]
        hlm = h.lm
        C = [(g, codec.lcm(hlm, polys[g].lm)) for g in G]
        D = []
        for pos, (g1, l1) in enumerate(C):
            if codec.disjoint(hlm, polys[g1].lm):
                D.append((g1, l1))
                continue
            others = C[pos + 1:]
            if any(codec.divides(l2, l1) for _, l2 in others) or any(codec.divides(l2, l1) for _, l2 in D):
                continue
            D.append((g1, l1))
        kept = []
        for item in pairs:
            _, l12, i, j = item
            if (
                not codec.divides(hlm, l12)
                or codec.lcm(polys[i].lm, hlm) == l12
                or codec.lcm(hlm, polys[j].lm) == l12
            ):
                kept.append(item)
        for g, l in D:
            if not codec.disjoint(hlm, polys[g].lm):
                f = polys[g]
                deg = codec.degree(l)
                sugar = max(h.sugar + deg - codec.degree(hlm), f.sugar + deg - codec.degree(f.lm))
                kept.append((sugar, l, g, h_idx))
        heapq.heapify(kept)
        pairs = kept
        G = [g for g in G if not codec.divides(hlm, polys[g].lm)] + [h_idx]

    def current():
        return [polys[g] for g in G]

    inputs = []
    for gen in system.generators:
        terms = {codec.pack(e): c for e, c in gen.terms.items()}
        if terms:
            inputs.append((gen.total_degree(), terms))
    inputs.sort(key=lambda x: (x[0], max(x[1])))
    for deg, terms in inputs:
        red = reduce_poly(dict(terms), current(), codec, budgets.max_terms)
        if not red:
            continue
        polys.append(_Poly(_make_monic(red), deg))
        update(len(polys) - 1)
        if polys[-1].lm == codec.one:
            break

    processed = 0
    while pairs and not any(polys[g].lm == codec.one for g in G):
        sugar, lcm, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > budgets.max_pairs:
            raise ResourceError(
                f"Groebner basis exceeded {budgets.max_pairs} S-pairs",
                pairs=processed,
                basis_size=len(G),
            )
        if budgets.max_seconds is not None and time.monotonic() - start > budgets.max_seconds:
            raise ResourceError(
                f"Groebner basis exceeded {budgets.max_seconds}s",
                pairs=processed,
                basis_size=len(G),
            )
        s, s_sugar = _spoly(polys[i], polys[j], lcm, codec)
        if not s:
            continue
        red = reduce_poly(s, current(), codec, budgets.max_terms)
        if not red:
            continue
        polys.append(_Poly(_make_monic(red), s_sugar))
        update(len(polys) - 1)

    final = current()
    if any(p.lm == codec.one for p in final):
        final = [_Poly({codec.one: mpq(1)}, 0)]
    # minimal basis, then interreduce tails
    final.sort(key=lambda p: p.lm)
    minimal = []
    for p in final:
        if not any(codec.divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for p in minimal:
        tail = {m: c for m, c in p.terms.items() if m != p.lm}
        others = [q for q in minimal if q is not p]
        tail = reduce_poly(tail, others, codec, budgets.max_terms)
        tail[p.lm] = mpq(1)
        reduced.append(_Poly(tail, p.sugar))
    reduced.sort(key=lambda p: p.lm, reverse=True)
    if stats is not None:
        stats.update(pairs=processed, basis_size=len(reduced), seconds=time.monotonic() - start)
    return reduced


def groebner_basis(system: PolySystem, order: str = "lex", budgets: Budgets | None = None, stats: dict | None = None) -> list[MultiPoly]:
    """Reduced Groebner basis for ``lex`` or ``grevlex`` on the declared variables."""
    codec = MonomialCodec(len(system.variables), order)
    return [_to_multipoly(p, codec, system.variables) for p in _buchberger(system, codec, budgets, stats)]


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly], variables: Sequence[str], order: str = "lex") -> MultiPoly:
    """Reduce ``p`` modulo a Groebner basis for ``order`` on ``variables``."""
    variables = tuple(variables)
    codec = MonomialCodec(len(variables), order)
    polys = []
    for g in basis:
        g = g.with_variables(variables)
        terms = {codec.pack(e): c for e, c in g.terms.items()}
        polys.append(_Poly(_make_monic(terms), 0))
    h = {codec.pack(e): c for e, c in p.with_variables(variables).terms.items()}
    rem = reduce_poly(h, polys, codec, 10**9)
    return MultiPoly._raw(variables, {codec.unpack(m): c for m, c in rem.items()})
