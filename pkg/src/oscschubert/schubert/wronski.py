"""Wronskians of k-planes of polynomials."""

from __future__ import annotations

from math import factorial

from gmpy2 import mpq

from ..exactalg import MultiPoly, PolyMatrix, determinant, rank

__all__ = ["row_polynomials", "wronskian", "wronskian_symbolic"]


def row_polynomials(M: PolyMatrix, variables: tuple[str, ...], var: str = "t") -> list[MultiPoly]:
    """Polynomials in ``var`` for the rows of M under e_b <-> (-1)^(b-1) t^(n-b)/(n-b)!.

    With this pairing the first row of ``F_k(t0)`` maps to
    ``(t - t0)^(n-1)/(n-1)!``, so the plane ``F_k(t0)`` has Wronskian
    ``c (t - t0)^(k(n-k))``.
    """
    ring = tuple(variables) + (var,)
    n = M.shape[1]
    basis = []
    for b in range(n):  # 0-based b
        e = [0] * len(ring)
        e[-1] = n - 1 - b
        coef = mpq((-1) ** b, factorial(n - 1 - b))
        basis.append(MultiPoly._raw(ring, {tuple(e): coef}))
    out = []
    for row in M.rows:
        acc = MultiPoly.zero(ring)
        for b, x in enumerate(row):
            if isinstance(x, MultiPoly):
                if x.is_zero():
                    continue
                acc = acc + x.with_variables(ring) * basis[b]
            elif x:
                acc = acc + basis[b] * x
        out.append(acc)
    return out


def wronskian_symbolic(M: PolyMatrix, variables: tuple[str, ...] = (), var: str = "t") -> MultiPoly:
    """Wronskian as a polynomial in ``variables + (var,)``."""
    polys = row_polynomials(M, variables, var)
    k = len(polys)
    W = []
    current = polys
    for _ in range(k):
        W.append(current)
        current = [p.derivative(var) for p in current]
    det = determinant(PolyMatrix(W))
    if not isinstance(det, MultiPoly):
        det = MultiPoly.constant(tuple(variables) + (var,), det)
    return det


def wronskian(M, n: int | None = None):
    """Wronskian of the row space of a constant k x n matrix.

    Returns a :class:`UniPoly` when the result has rational coefficients,
    otherwise a :class:`MultiPoly` in ``t`` over Q(i).
    """
    if not isinstance(M, PolyMatrix):
        M = PolyMatrix(M)
    if n is not None and M.shape[1] != n:
        raise ValueError(f"matrix has {M.shape[1]} columns, expected {n}")
    if not M.is_constant():
        raise ValueError("wronskian() needs constant entries; use wronskian_symbolic")
    M = M.map(lambda x: x.constant_term() if isinstance(x, MultiPoly) else x)
    if rank(M) < M.shape[0]:
        raise ValueError("matrix does not have full row rank")
    w = wronskian_symbolic(M)
    if w.is_rational():
        return w.to_unipoly("t")
    return w

