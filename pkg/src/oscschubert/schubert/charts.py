"""Osculating flags and local coordinates for Schubert cells."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from gmpy2 import mpq

from ..combinat import Partition
from ..exactalg import GaussianRational, MultiPoly, PolyMatrix
from .points import OsculationPoint

__all__ = ["flag_matrix", "flag_annihilator", "Chart", "chart_matrix"]

ONE = "1"
ZERO = "0"


def _power(t, e):
    return t ** e if e else mpq(1)


def _scalar(x):
    if isinstance(x, GaussianRational) and x.is_real():
        return x.re
    return x


def flag_matrix(t: OsculationPoint, i: int, n: int) -> PolyMatrix:
    """Rows spanning the i-dimensional piece of the osculating flag at t.

    Row a (1-based) is the (a-1)st derivative of the curve
    ``gamma(s) = (1, s, s^2/2!, ..., s^(n-1)/(n-1)!)`` at ``s = t``. At
    infinity the rows are the last i standard basis vectors.
    """
    t = OsculationPoint.of(t)
    if not 0 <= i <= n:
        raise ValueError(f"flag index {i} outside 0..{n}")
    if t.is_infinite:
        return PolyMatrix([[mpq(1) if b == n - i + a else mpq(0) for b in range(n)] for a in range(i)])
    v = _scalar(t.value)
    rows = []
    for a in range(i):
        rows.append([_scalar(_power(v, b - a) / factorial(b - a)) if b >= a else mpq(0) for b in range(n)])
    return PolyMatrix(rows)


def flag_annihilator(t: OsculationPoint, i: int, n: int) -> PolyMatrix:
    """An n x (n-i) matrix whose columns span the annihilator of ``F_i(t)``.

    For finite t the flag is the row span of the first i rows of the
    unipotent matrix U(t) = exp(t N); its annihilator is spanned by the last
    n-i columns of U(-t) = U(t)^-1.
    """
    t = OsculationPoint.of(t)
    if t.is_infinite:
        return PolyMatrix([[mpq(1) if b == c else mpq(0) for c in range(n - i)] for b in range(n)])
    v = -_scalar(t.value)
    return PolyMatrix(
        [[_scalar(_power(v, c - b) / factorial(c - b)) if c >= b else mpq(0) for c in range(i, n)] for b in range(n)]
    )


@dataclass(frozen=True)
class Chart:
    """Local coordinates on a Schubert cell of Gr(k, n).

    ``at_infinity`` is the partition whose Schubert variety at infinity the
    chart parameterizes; ``at_zero`` (double charts only) the one at 0.
    ``pattern[i][j]`` is ``"1"``, ``"0"`` or a variable name.
    """

    k: int
    n: int
    at_infinity: Partition = field(default_factory=Partition)
    at_zero: Partition | None = None
    pattern: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        k, n = self.k, self.n
        lam = Partition(self.at_infinity)
        object.__setattr__(self, "at_infinity", lam)
        if self.at_zero is not None:
            object.__setattr__(self, "at_zero", Partition(self.at_zero))
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        if not lam.fits(k, n) or (self.at_zero is not None and not self.at_zero.fits(k, n)):
            raise ValueError(f"chart partitions must fit the {k}x{n - k} rectangle")
        lam_p = lam.padded(k)
        pivots = [i + lam_p[k - 1 - i] for i in range(k)]  # 0-based columns
        if self.at_zero is None:
            last = [n - 1] * k
        else:
            mu_p = self.at_zero.padded(k)
            last = [n - k + i - mu_p[i] for i in range(k)]
        for i in range(k):
            if last[i] < pivots[i]:
                raise ValueError(
                    f"empty cell: X_{lam}(inf) and X_{self.at_zero}(0) do not meet in Gr({k},{n})"
                )
        wide = n >= 10 or k >= 10
        rows = []
        for i in range(k):
            row = []
            for j in range(n):
                if j < pivots[i] or j > last[i]:
                    row.append(ZERO)
                elif j == pivots[i]:
                    row.append(ONE)
                elif self.at_zero is None and j in pivots:
                    row.append(ZERO)
                else:
                    row.append(f"m{i + 1}_{j + 1}" if wide else f"m{i + 1}{j + 1}")
            rows.append(tuple(row))
        object.__setattr__(self, "pattern", tuple(rows))

    @classmethod
    def full(cls, k: int, n: int) -> "Chart":
        return cls(k, n)

    @property
    def kind(self) -> str:
        if self.at_zero is not None:
            return "at_zero_and_infinity"
        return "at_infinity" if self.at_infinity.size else "full"

    @property
    def variables(self) -> tuple[str, ...]:
        """Variable names in row-major order."""
        return tuple(x for row in self.pattern for x in row if x not in (ONE, ZERO))

    def anchors(self) -> tuple[OsculationPoint, ...]:
        out = []
        if self.at_infinity.size:
            out.append(OsculationPoint(None))
        if self.at_zero is not None:
            out.append(OsculationPoint(0))
        return tuple(out)

    def descriptor(self) -> str:
        """Short text form, e.g. ``full``, ``inf(3.3.3)``, ``inf(1.1)+zero(2.1)``."""
        if self.kind == "full":
            return "full"
        text = f"inf({self.at_infinity})"
        if self.at_zero is not None:
            text += f"+zero({self.at_zero})"
        return text

    def to_ascii(self) -> str:
        width = max(len(x) for row in self.pattern for x in row)
        return "\n".join(" ".join(x.rjust(width) for x in row) for row in self.pattern)

    def __str__(self):
        return self.descriptor()


def chart_matrix(chart: Chart, variables: tuple[str, ...] | None = None) -> PolyMatrix:
    """The k x n matrix of the chart with entries in the chart's polynomial ring."""
    variables = tuple(variables) if variables is not None else chart.variables
    rows = []
    for prow in chart.pattern:
        row = []
        for x in prow:
            if x == ONE:
                row.append(MultiPoly.constant(variables, 1))
            elif x == ZERO:
                row.append(MultiPoly.zero(variables))
            else:
                row.append(MultiPoly.var(variables, x))
        rows.append(row)
    return PolyMatrix(rows)
