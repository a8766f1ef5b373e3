"""The hook family (box, 1^(n-1)): solutions as factorizations of f'.

For the Schubert problem with the condition ``((n-k-1)^(k-1))`` at infinity
and ``(1)`` at the n-1 roots of ``f``, solutions correspond to the ways of
writing ``f'/(n-1)`` as a product of monic polynomials of degrees k-1 and
n-k-1. Real solutions correspond to real factorizations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from gmpy2 import mpq

from .combinat import Partition, SchubertProblemSpec, hook_complement, hook_problem, nu
from .errors import DegeneracyError, ResourceError
from .exactalg import MultiPoly, PolyMatrix, UniPoly, as_rational, determinant, is_squarefree, sturm_count_real_roots
from .groebner import Budgets, PolySystem, SolveReport, solve_system
from .schubert import INF, Mobius, OsculatingInstance, OsculationPoint, flag_matrix

__all__ = [
    "HookInstance",
    "FactorizationPair",
    "predicted_real_count",
    "H_matrix",
    "hook_constants",
    "verify_det_identity",
    "direct_system",
    "solve_direct",
    "mod4_factorization_census",
    "is_hook_problem",
    "hook_instance_from",
    "SYMBOLIC_MAX_N",
]

SYMBOLIC_MAX_N = 9


def is_hook_problem(problem: SchubertProblemSpec) -> bool:
    """True for (box, 1^(n-1)) with 2 <= k <= n-2, excluding Gr(2,4).

    In Gr(2,4) the box is (1) itself, so the problem is (1)^4 and no
    condition is distinguished; it is treated as an ordinary problem.
    """
    k, n = problem.k, problem.n
    if k < 2 or n - k < 2 or (k, n) == (2, 4):
        return False
    return problem == hook_problem(k, n)


@dataclass(frozen=True)
class HookInstance:
    """n-1 distinct finite points, closed under conjugation, with the box at infinity."""

    k: int
    n: int
    points: tuple

    def __post_init__(self):
        pts = tuple(OsculationPoint.of(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if self.k < 2 or self.n - self.k < 2:
            raise ValueError(f"hook family needs 2 <= k <= n-2, got k={self.k}, n={self.n}")
        if len(pts) != self.n - 1:
            raise ValueError(f"need {self.n - 1} points, got {len(pts)}")
        if any(p.is_infinite for p in pts):
            raise ValueError("points must be finite (infinity carries the box condition)")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        for p in pts:
            if p.conjugate() not in pts:
                raise ValueError(f"point {p} has no conjugate partner")

    @property
    def r_box(self) -> int:
        """Number of real points carrying the condition (1) (the osculation type)."""
        return sum(1 for p in self.points if p.is_real)

    @property
    def f(self) -> UniPoly:
        poly = MultiPoly.constant(("t",), 1)
        t = MultiPoly.var(("t",), "t")
        for p in self.points:
            poly = poly * (t - p.value)
        return poly.to_unipoly("t")

    @property
    def fprime(self) -> UniPoly:
        return self.f.derivative()

    def derivative_real_roots(self) -> int:
        fp = self.fprime
        if not is_squarefree(fp):
            raise DegeneracyError("f' has a repeated root", f=str(self.f))
        return sturm_count_real_roots(fp)

    def to_osculating(self) -> OsculatingInstance:
        problem = hook_problem(self.k, self.n)
        box = hook_complement(self.k, self.n)
        return OsculatingInstance(problem, ((box, INF),) + tuple((Partition((1,)), p) for p in self.points))


def hook_instance_from(instance: OsculatingInstance) -> HookInstance:
    """View a hook-family osculating instance with the box moved to infinity."""
    if not is_hook_problem(instance.problem):
        raise ValueError(f"{instance.problem} is not in the hook family")
    box = hook_complement(instance.k, instance.n)
    anchor = next(t for lam, t in instance.assignment if lam == box)
    phi = Mobius.sending(anchor)
    pts = [phi(t) for lam, t in instance.assignment if lam != box]
    return HookInstance(instance.k, instance.n, tuple(pts))


def predicted_real_count(instance: HookInstance) -> int:
    """nu(k, n, r) with r the number of real roots of f'."""
    return nu(instance.k, instance.n, instance.derivative_real_roots())


@dataclass(frozen=True)
class FactorizationPair:
    """Monic g (degree k-1) and h (degree n-k-1) with g*h = f'/(n-1)."""

    g: UniPoly
    h: UniPoly

    def check(self, f: UniPoly) -> bool:
        n = f.degree + 1
        if self.g.leading_coefficient() != 1 or self.h.leading_coefficient() != 1:
            return False
        return self.g * self.h == f.derivative().scale(mpq(1, n - 1))


def hook_constants(k: int, n: int) -> list:
    """c_i = (-1)^(n-k-i+1) (n-k-i)! for i = 1..n-k."""
    return [mpq((-1) ** (n - k - i + 1) * factorial(n - k - i)) for i in range(1, n - k + 1)]


def H_matrix(f0, g: Sequence, h: Sequence, constants: Sequence | None = None) -> PolyMatrix:
    """The k x n matrix whose row space is H(f, g, h).

    ``g = (g_0, ..., g_{n-k-1})`` and ``h = (h_0, ..., h_{k-1})`` with
    ``g_{n-k-1} = h_{k-1} = 1``; entries may be rationals or polynomials,
    but h_0..h_{k-2} must be invertible scalars when rational.
    """
    k, nk = len(h), len(g)
    n = k + nk
    if k < 2 or nk < 2:
        raise ValueError("need k >= 2 and n-k >= 2")
    if g[-1] != 1 or h[-1] != 1:
        raise ValueError("g and h must be monic (last coefficient 1)")
    for j in range(k - 1):
        if not isinstance(h[j], MultiPoly) and not h[j]:
            raise ValueError(f"h_{j} must be nonzero")
    c = list(constants) if constants is not None else hook_constants(k, n)
    zero = mpq(0)
    rows = []
    first = [c[i - 1] * g[nk - i] for i in range(1, nk + 1)] + [_div(f0, h[0])] + [zero] * (k - 1)
    rows.append(first)
    for r in range(2, k + 1):
        row = [zero] * n
        row[nk + r - 2] = mpq(-(r - 1))
        row[nk + r - 1] = _div(h[r - 2], h[r - 1])
        rows.append(row)
    return PolyMatrix(rows)


def _div(a, b):
    if isinstance(b, MultiPoly):
        raise TypeError("symbolic denominators are cleared by verify_det_identity")
    return a / as_rational(b) if not isinstance(a, MultiPoly) else a / b


def _symbols(k: int, n: int):
    names = ["f0"] + [f"g{i}" for i in range(n - k - 1)] + [f"h{j}" for j in range(k - 1)] + ["t"]
    ring = tuple(names)

    def v(name):
        return MultiPoly.var(ring, name)

    return ring, v


def _cleared_matrix(k: int, n: int, ring, v, constants) -> PolyMatrix:
    """H(f,g,h) with row 1 scaled by h_0 and row r by h_{r-1}: polynomial entries."""
    one = MultiPoly.constant(ring, 1)
    zero = MultiPoly.zero(ring)
    nk = n - k
    g = [v(f"g{i}") for i in range(nk - 1)] + [one]
    h = [v(f"h{j}") for j in range(k - 1)] + [one]
    rows = []
    first = [g[nk - i] * constants[i - 1] * h[0] for i in range(1, nk + 1)] + [v("f0")] + [zero] * (k - 1)
    rows.append(first)
    for r in range(2, k + 1):
        row = [zero] * n
        row[nk + r - 2] = h[r - 1] * mpq(-(r - 1))
        row[nk + r - 1] = h[r - 2]
        rows.append(row)
    return PolyMatrix(rows)


def _flag_symbolic(ring, i: int, n: int) -> PolyMatrix:
    t = MultiPoly.var(ring, "t")
    rows = []
    for a in range(i):
        rows.append([t ** (b - a) * mpq(1, factorial(b - a)) if b >= a else MultiPoly.zero(ring) for b in range(n)])
    return PolyMatrix(rows)


def _identity_rhs(k: int, n: int, ring, v):
    one = MultiPoly.constant(ring, 1)
    nk = n - k
    g = [v(f"g{i}") for i in range(nk - 1)] + [one]
    h = [v(f"h{j}") for j in range(k - 1)] + [one]
    t = v("t")
    total = v("f0")
    for i in range(nk):
        for j in range(k):
            total = total + g[i] * h[j] * t ** (i + j + 1) * mpq(1, i + j + 1)
    scale = one
    for j in range(k - 1):
        scale = scale * h[j]
    sign = -1 if (k * (n - k)) % 2 else 1
    return total * scale * sign


def verify_det_identity(
    k: int,
    n: int,
    constants: Sequence | None = None,
    mode: str = "auto",
    trials: int = 5,
    seed: int = 0,
) -> bool:
    """Check det[H(f,g,h); F_{n-k}(t)] against the closed form.

    Both sides are multiplied by h_0 ... h_{k-2} to clear denominators.
    ``mode="symbolic"`` expands in f0, g_i, h_j, t; ``"random"`` substitutes
    random rationals for f0, g, h and compares polynomials in t; ``"auto"``
    is symbolic for n <= 9. ``constants`` overrides the c_i (negative
    controls).
    """
    if k < 2 or n - k < 2:
        raise ValueError("need 2 <= k and 2 <= n-k")
    c = list(constants) if constants is not None else hook_constants(k, n)
    if mode == "auto":
        mode = "symbolic" if n <= SYMBOLIC_MAX_N else "random"
    ring, v = _symbols(k, n)
    if mode == "symbolic":
        M = _cleared_matrix(k, n, ring, v, c).stack(_flag_symbolic(ring, n - k, n))
        try:
            lhs = determinant(M)
        except MemoryError as exc:  # pragma: no cover
            raise ResourceError(f"symbolic determinant for ({k},{n}) ran out of memory") from exc
        return lhs == _identity_rhs(k, n, ring, v)
    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    M = _cleared_matrix(k, n, ring, v, c).stack(_flag_symbolic(ring, n - k, n))
    rhs = _identity_rhs(k, n, ring, v)
    for _ in range(trials):
        values = {name: mpq(rng.randint(-9, 9) or 1, rng.randint(1, 5)) for name in ring if name != "t"}
        Ms = M.map(lambda x: x.substitute(values) if isinstance(x, MultiPoly) else x)
        if determinant(Ms) != rhs.substitute(values):
            return False
    return True


def direct_system(instance: HookInstance) -> PolySystem:
    """Equations g*h = f'/(n-1), coefficientwise, for monic g (deg k-1) and h (deg n-k-1)."""
    k, n = instance.k, instance.n
    gvars = [f"g{i}" for i in range(k - 1)]
    hvars = [f"h{j}" for j in range(n - k - 1)]
    ring = tuple(gvars + hvars)
    one = MultiPoly.constant(ring, 1)
    g = [MultiPoly.var(ring, x) for x in gvars] + [one]
    h = [MultiPoly.var(ring, x) for x in hvars] + [one]
    target = instance.fprime.scale(mpq(1, n - 1))
    eqs = []
    for d in range(n - 2):
        acc = MultiPoly.zero(ring)
        for a in range(max(0, d - (n - k - 1)), min(d, k - 1) + 1):
            acc = acc + g[a] * h[d - a]
        eqs.append(acc - target[d])
    return PolySystem(ring, tuple(eqs))


def solve_direct(instance: HookInstance, seed: int = 0, budgets: Budgets | None = None) -> SolveReport:
    """Count (real) factorizations through the Groebner solver."""
    system = direct_system(instance)
    return solve_system(
        system.variables,
        system.generators,
        expected=comb(instance.n - 2, instance.k - 1),
        seed=seed,
        chart="direct",
        budgets=budgets,
    )


def mod4_factorization_census(f: UniPoly, m: int) -> tuple[int, int]:
    """(nonreal, self-conjugate) ordered factorizations of f into monic degree-m factors.

    Roots are labeled abstractly (r real ones, c conjugate pairs) and every
    m-subset is enumerated: g takes the subset, h the rest. A pair is real
    when the subset is closed under conjugation and self-conjugate when h is
    the conjugate of g.
    """
    if f.degree != 2 * m:
        raise ValueError(f"need deg f = 2m = {2 * m}, got {f.degree}")
    if not is_squarefree(f):
        raise ValueError("f must be squarefree")
    r = sturm_count_real_roots(f)
    c = (2 * m - r) // 2
    # labels 0..r-1 real; r+2j, r+2j+1 conjugate
    conj = list(range(r))
    for j in range(c):
        conj += [r + 2 * j + 1, r + 2 * j]
    labels = range(2 * m)
    nonreal = selfconj = 0
    for subset in combinations(labels, m):
        s = set(subset)
        image = {conj[x] for x in s}
        if image != s:
            nonreal += 1
        if image == set(labels) - s:
            selfconj += 1
    return nonreal, selfconj
