"""Matrices of exact scalars or polynomials: minors, determinants, rank."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from gmpy2 import mpq

from .multipoly import MultiPoly
from .numbers import GaussianRational, Rational

__all__ = ["PolyMatrix", "determinant", "minor", "rank", "bareiss_determinant"]


def _is_poly(x) -> bool:
    return isinstance(x, MultiPoly)


def _mul(a, b):
    if _is_poly(b) and not _is_poly(a):
        return b * a
    return a * b


def _is_zero(x) -> bool:
    return x.is_zero() if _is_poly(x) else not x


class PolyMatrix:
    """A rectangular grid whose entries are scalars or :class:`MultiPoly`."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows have unequal lengths")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_constant(self) -> bool:
        return all(not _is_poly(x) or x.is_constant() for r in self.rows for x in r)

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape[1] != other.shape[1]:
            raise ValueError("column counts differ")
        return PolyMatrix(self.rows + other.rows)

    def submatrix(self, rowset: Sequence[int], colset: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in colset] for i in rowset])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(x) for x in r] for r in self.rows])

    def substitute(self, values) -> "PolyMatrix":
        def sub(x):
            if _is_poly(x):
                y = x.substitute(values)
                return y.constant_term() if y.is_constant() else y
            return x

        return self.map(sub)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def to_ascii(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    def __repr__(self):
        return f"PolyMatrix({self.shape[0]}x{self.shape[1]})"


def _constant_value(x):
    if _is_poly(x):
        return x.constant_term()
    return x


def bareiss_determinant(rows: Sequence[Sequence]):
    """Fraction-free elimination for constant (rational or Gaussian) entries."""
    a = [[_constant_value(x) for x in r] for r in rows]
    n = len(a)
    if n == 0:
        return mpq(1)
    sign = 1
    prev = mpq(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return mpq(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
            row_i[k] = mpq(0)
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def _cofactor_determinant(rows: list[list]):
    n = len(rows)
    memo: dict = {}

    def det(i: int, cols: tuple):
        if i == n:
            return mpq(1)
        key = (i, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = None
        for pos, j in enumerate(cols):
            entry = rows[i][j]
            if _is_zero(entry):
                continue
            sub = det(i + 1, cols[:pos] + cols[pos + 1:])
            if _is_zero(sub):
                continue
            term = _mul(entry, sub)
            if pos & 1:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = mpq(0)
        memo[key] = total
        return total

    return det(0, tuple(range(n)))


def determinant(mat: PolyMatrix | Sequence[Sequence]):
    """Exact determinant of a square matrix.

    Constant matrices go through Bareiss elimination; matrices with symbolic
    entries through Laplace expansion along rows, memoized on the set of
    remaining columns.
    """
    m = mat if isinstance(mat, PolyMatrix) else PolyMatrix(mat)
    r, c = m.shape
    if r != c:
        raise ValueError(f"determinant of a non-square {r}x{c} matrix")
    if m.is_constant():
        return bareiss_determinant(m.rows)
    return _cofactor_determinant(m.rows)


def minor(mat: PolyMatrix, rowset: Sequence[int], colset: Sequence[int]):
    if len(rowset) != len(colset):
        raise ValueError("minor needs as many rows as columns")
    r, c = mat.shape
    if any(not 0 <= i < r for i in rowset) or any(not 0 <= j < c for j in colset):
        raise IndexError("minor selection out of bounds")
    return determinant(mat.submatrix(rowset, colset))


def all_minors(mat: PolyMatrix, size: int) -> list:
    r, c = mat.shape
    return [
        minor(mat, rs, cs)
        for rs in combinations(range(r), size)
        for cs in combinations(range(c), size)
    ]


def rank(mat: PolyMatrix | Sequence[Sequence]) -> int:
    """Rank of a constant matrix over Q or Q(i) by Gaussian elimination."""
    rows = mat.rows if isinstance(mat, PolyMatrix) else mat
    a = [[_constant_value(x) for x in r] for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rk], a[pivot] = a[pivot], a[rk]
        inv = 1 / a[rk][col] if not isinstance(a[rk][col], GaussianRational) else GaussianRational(1) / a[rk][col]
        for i in range(rk + 1, nrows):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
        if rk == nrows:
            break
    return rk
