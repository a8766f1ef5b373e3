"""Osculating instances, osculation types and their polynomial systems."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..combinat import Partition, SchubertProblemSpec, as_partition
from ..exactalg import MultiPoly, PolyMatrix, all_minors, determinant, split_real_imaginary
from .charts import Chart, chart_matrix, flag_annihilator, flag_matrix
from .points import INF, Mobius, OsculationPoint

__all__ = [
    "OsculatingInstance",
    "OsculationType",
    "osculation_type",
    "condition_equations",
    "InstanceSystem",
    "instance_system",
    "choose_anchors",
]


@dataclass(frozen=True)
class OsculationType:
    """Number of real osculation points carried by each condition (infinity is real)."""

    counts: tuple  # ((Partition, r), ...) in the problem's condition order

    def __getitem__(self, lam) -> int:
        lam = as_partition(lam)
        for p, r in self.counts:
            if p == lam:
                return r
        raise KeyError(lam)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.counts)

    def to_text(self) -> str:
        return ",".join(str(r) for r in self.as_tuple())

    def __str__(self):
        return self.to_text()

    def is_admissible_for(self, problem: SchubertProblemSpec) -> bool:
        if tuple(p for p, _ in self.counts) != problem.partitions:
            return False
        return all(
            0 <= r <= a and (a - r) % 2 == 0
            for (_, r), a in zip(self.counts, problem.multiplicities)
        )

    @classmethod
    def of(cls, problem: SchubertProblemSpec, counts: Sequence[int]) -> "OsculationType":
        counts = tuple(int(r) for r in counts)
        if len(counts) != len(problem.partitions):
            raise ValueError(f"type needs {len(problem.partitions)} entries, got {len(counts)}")
        t = cls(tuple(zip(problem.partitions, counts)))
        if not t.is_admissible_for(problem):
            raise ValueError(
                f"osculation type {counts} incompatible with multiplicities {problem.multiplicities}"
            )
        return t

    @staticmethod
    def all_for(problem: SchubertProblemSpec) -> list["OsculationType"]:
        """Every admissible type, in descending lexicographic order."""
        ranges = [range(a, -1, -2) for a in problem.multiplicities]
        out = [()]
        for rng in ranges:
            out = [prev + (r,) for prev in out for r in rng]
        return [OsculationType.of(problem, c) for c in sorted(out, reverse=True)]


@dataclass(frozen=True)
class OsculatingInstance:
    """A Schubert problem with one osculation point per condition occurrence."""

    problem: SchubertProblemSpec
    assignment: tuple  # ((Partition, OsculationPoint), ...)

    def __post_init__(self):
        pairs = tuple((as_partition(lam), OsculationPoint.of(t)) for lam, t in self.assignment)
        object.__setattr__(self, "assignment", pairs)
        got = Counter(lam for lam, _ in pairs)
        want = Counter(self.problem.expanded())
        if got != want:
            raise ValueError(f"assignment conditions {dict(got)} do not match the problem {dict(want)}")
        points = [t for _, t in pairs]
        if len(set(points)) != len(points):
            raise ValueError("osculation points must be pairwise distinct")
        for lam, t in pairs:
            if not t.is_real and (lam, t.conjugate()) not in pairs:
                raise ValueError(f"point {t} with condition {lam} has no conjugate partner")

    @classmethod
    def build(cls, problem, assignment: Iterable) -> "OsculatingInstance":
        if isinstance(problem, str):
            problem = SchubertProblemSpec.parse(problem)
        return cls(problem, tuple(assignment))

    @property
    def k(self) -> int:
        return self.problem.k

    @property
    def n(self) -> int:
        return self.problem.n

    @property
    def points(self) -> tuple[OsculationPoint, ...]:
        return tuple(t for _, t in self.assignment)

    def transformed(self, phi: Mobius) -> "OsculatingInstance":
        return OsculatingInstance(self.problem, tuple((lam, phi(t)) for lam, t in self.assignment))


def osculation_type(instance: OsculatingInstance) -> OsculationType:
    counts = Counter(lam for lam, t in instance.assignment if t.is_real)
    return OsculationType(tuple((p, counts.get(p, 0)) for p in instance.problem.partitions))


def _stacked_minors(M: PolyMatrix, nu: Partition, t: OsculationPoint, n: int, k: int) -> list:
    out = []
    for i in range(1, k + 1):
        v = nu.part(i - 1)
        if v == 0:
            continue
        F = flag_matrix(t, n - k + i - v, n)
        out.extend(all_minors(M.stack(F), n - v + 1))
    return out


def _kernel_minors(M: PolyMatrix, nu: Partition, t: OsculationPoint, n: int, k: int) -> list:
    # dim(H cap F_a) >= i  <=>  rank(M A) <= k - i, A spanning the annihilator of F_a
    out = []
    for i in range(1, k + 1):
        v = nu.part(i - 1)
        if v == 0:
            continue
        a = n - k + i - v
        A = flag_annihilator(t, a, n)
        MA = []
        for row in M.rows:
            new_row = []
            for c in range(n - a):
                acc = None
                for b in range(n):
                    coef = A.rows[b][c]
                    if coef and not row[b].is_zero():
                        term = row[b] * coef
                        acc = term if acc is None else acc + term
                new_row.append(acc if acc is not None else MultiPoly.zero(row[0].variables))
            MA.append(new_row)
        size = k - i + 1
        if size > n - a:
            continue
        P = PolyMatrix(MA)
        for rs in combinations(range(k), size):
            for cs in combinations(range(n - a), size):
                out.append(determinant(P.submatrix(rs, cs)))
    return out


def _as_poly(x, variables) -> MultiPoly:
    return x if isinstance(x, MultiPoly) else MultiPoly.constant(variables, x)


def _clean(polys: Iterable, variables) -> list[MultiPoly]:
    """Drop zeros and duplicates up to scalars; keep first-seen order."""
    out, seen = [], set()
    for p in polys:
        p = _as_poly(p, variables)
        if p.is_zero():
            continue
        q = p.monic()
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


def condition_equations(
    chart: Chart,
    nu,
    t,
    method: str = "kernel",
    split: bool = True,
) -> list[MultiPoly]:
    """Polynomials cutting out ``X_nu(t)`` in the chart.

    ``method="stacked"`` returns every minor of size n-nu_i+1 of
    ``[chart_matrix; F_{n-k+i-nu_i}(t)]``; ``"kernel"`` returns the
    (k-i+1)-minors of the chart matrix times a basis of the annihilator of
    the same flag piece, which generate the same ideal with far fewer and
    lower-degree polynomials. For nonreal t the equations are split into
    real and imaginary parts (one system for the conjugate pair) unless
    ``split`` is false.
    """
    nu = as_partition(nu)
    t = OsculationPoint.of(t)
    if not nu.size:
        raise ValueError("empty condition imposes no equations")
    if t in chart.anchors():
        raise ValueError(f"point {t} is a chart anchor; fold its condition into the chart")
    k, n = chart.k, chart.n
    if not nu.fits(k, n):
        raise ValueError(f"{nu} does not fit in the {k}x{n - k} rectangle")
    M = chart_matrix(chart)
    variables = chart.variables
    if method == "stacked":
        raw = _stacked_minors(M, nu, t, n, k)
    elif method == "kernel":
        raw = _kernel_minors(M, nu, t, n, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    polys = [_as_poly(p, variables) for p in raw]
    if split and not t.is_real:
        parts = []
        for p in polys:
            parts.extend(split_real_imaginary(p))
        polys = parts
    return _clean(polys, variables)


def choose_anchors(instance: OsculatingInstance, use_zero: bool = True):
    """Pick the Moebius move and chart partitions for an instance.

    The real condition of largest weight goes to infinity and the next
    largest to zero; ties prefer points already at infinity, then at zero.
    Returns ``(mobius, lam_at_inf, mu_at_zero)`` with None for unused slots.
    With ``use_zero`` false only the anchor at infinity is used.
    """
    real = [(lam, t) for lam, t in instance.assignment if t.is_real]
    if not real:
        return Mobius(), None, None

    def key(item):
        lam, t = item
        return (-lam.size, 0 if t.is_infinite else 1 if t == OsculationPoint(0) else 2, t.sort_key())

    real.sort(key=key)
    first = real[0]
    if len(real) == 1 or not use_zero:
        if not use_zero and len(real) > 1 and first[1].is_infinite:
            return Mobius(), first[0], None
        return Mobius.sending(first[1]), first[0], None
    rest = sorted(real[1:], key=lambda it: (-it[0].size, 0 if it[1] == OsculationPoint(0) else 1, it[1].sort_key()))
    second = rest[0]
    phi = Mobius.sending(first[1], second[1])
    try:
        Chart(instance.k, instance.n, first[0], second[0])
    except ValueError:
        return phi, first[0], None
    return phi, first[0], second[0]


@dataclass(frozen=True)
class InstanceSystem:
    """Polynomial system for an instance in a chart, after the coordinate change."""

    chart: Chart
    equations: tuple
    mobius: Mobius
    instance: OsculatingInstance  # with transformed points

    @property
    def variables(self) -> tuple[str, ...]:
        return self.chart.variables


def instance_system(instance: OsculatingInstance, method: str = "kernel", use_zero: bool = True) -> InstanceSystem:
    """Chart and equations for an osculating instance.

    Conditions anchored at infinity (and zero) are absorbed into the chart;
    each remaining real point contributes its rational equations and each
    conjugate pair one merged real system. The chart at infinity alone is
    an exact parameterization of the Schubert cell; the double chart is
    smaller but covers only a dense open part of the intersection, so
    callers may fall back to ``use_zero=False``.
    """
    phi, lam, mu = choose_anchors(instance, use_zero)
    moved = instance.transformed(phi)
    k, n = instance.k, instance.n
    if lam is None:
        chart = Chart.full(k, n)
    else:
        chart = Chart(k, n, lam, mu)
    anchored = []
    if lam is not None:
        anchored.append((lam, INF))
    if mu is not None:
        anchored.append((mu, OsculationPoint(0)))
    eqs: list[MultiPoly] = []
    for cond, t in moved.assignment:
        if (cond, t) in anchored:
            anchored.remove((cond, t))
            continue
        if not t.is_real and t.value.im < 0:
            continue  # covered by its conjugate partner
        eqs.extend(condition_equations(chart, cond, t, method=method))
    if anchored:
        raise AssertionError(f"anchors {anchored} not found after the coordinate change")
    return InstanceSystem(chart, tuple(_clean(eqs, chart.variables)), phi, moved)
