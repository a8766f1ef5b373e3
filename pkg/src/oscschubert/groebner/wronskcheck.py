"""Exact check that every solution's Wronskian has the prescribed root orders.

A solution H of an osculating instance lies in X_lambda(t) for each of its
conditions, so its Wronskian vanishes to order at least |lambda| at t. The
orders sum to k(n-k), the degree bound, so they must be exact. This module
checks that directly for all solutions at once by working in Q[z]/(e(z)),
where e is the squarefree eliminant of a shape-position basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from ..errors import DegeneracyError
from ..exactalg import MultiPoly, UniPoly, poly_gcd
from ..schubert import chart_matrix, wronskian_symbolic
from .solve import SolveReport, _solve_instance

__all__ = ["WronskianCheck", "solution_parametrization", "check_wronskian_orders"]


@dataclass(frozen=True)
class WronskianCheck:
    """Outcome of the root-order check.

    ``orders`` lists (point text, required order) in the transformed
    coordinates used by the chart; ``ok`` is true when every solution's
    Wronskian equals a unit times prod (t - t_i)^|lambda_i| over the finite
    points, which forces order exactly |lambda| at infinity as well.
    """

    ok: bool
    num_solutions: int
    orders: tuple
    report: SolveReport
    detail: str = ""


def solution_parametrization(report: SolveReport, chart_variables) -> tuple[UniPoly, dict]:
    """(eliminant, {chart variable: polynomial in z}) from a shape-position basis."""
    if not report.basis:
        raise ValueError("report carries no basis; solve with keep_basis=True")
    variables = report.variables
    last = variables[-1]
    e = report.eliminant
    phi = {last: UniPoly([0, 1])}
    for g in report.basis[:-1]:
        lead = g.leading_term()[0]
        j = lead.index(1)
        rest = MultiPoly.var(variables, variables[j]) - g
        phi[variables[j]] = rest.to_unipoly(last) % e if not rest.is_zero() else UniPoly([])
    if report.randomization:
        orig_last = next(v for v in chart_variables if v not in phi)
        value = UniPoly([0, 1])
        for v, c in report.randomization:
            value = value - phi[v].scale(c)
        phi[orig_last] = value % e
        del phi[last]
    missing = set(chart_variables) - set(phi)
    if missing:
        raise DegeneracyError(f"no parametrization for {sorted(missing)}")
    return e, phi


def check_wronskian_orders(instance, seed: int = 0, budgets=None) -> WronskianCheck:
    """Solve ``instance`` and verify the Wronskian root orders of every solution."""
    system, report = _solve_instance(instance, None, seed, budgets, True, "fglm")
    orders = tuple((t.to_text(), lam.size) for lam, t in system.instance.assignment)
    if not report.transversal:
        return WronskianCheck(False, report.num_complex, orders, report, f"not transversal: {report.reason}")
    chart = system.chart
    e, phi = solution_parametrization(report, chart.variables)
    k, n = chart.k, chart.n

    W = wronskian_symbolic(chart_matrix(chart), chart.variables)
    ring = W.variables
    ti = len(ring) - 1
    powers: dict = {}

    def power(v, p):
        key = (v, p)
        if key not in powers:
            powers[key] = UniPoly([1]) if p == 0 else (power(v, p - 1) * phi[v]) % e
        return powers[key]

    coeffs: dict[int, UniPoly] = {}
    for exps, c in W.terms.items():
        val = UniPoly([c])
        for v, p in zip(ring[:-1], exps[:-1]):
            if p:
                val = (val * power(v, p)) % e
        d = exps[ti]
        coeffs[d] = coeffs.get(d, UniPoly([])) + val
    coeffs = {d: p % e for d, p in coeffs.items()}

    # prod over finite points (rational since the point set is conjugation-closed)
    target = MultiPoly.constant(("t",), 1)
    t = MultiPoly.var(("t",), "t")
    for lam, pt in system.instance.assignment:
        if not pt.is_infinite:
            target = target * (t - pt.value) ** lam.size
    if not target.is_rational():
        raise DegeneracyError("point set is not closed under conjugation")
    P = target.to_unipoly("t")
    D = P.degree
    for d, w in coeffs.items():
        if d > D and not w.is_zero():
            return WronskianCheck(False, report.num_complex, orders, report, f"t^{d} coefficient survives")
    lead = coeffs.get(D, UniPoly([]))
    if lead.is_zero() or poly_gcd(lead, e).degree > 0:
        return WronskianCheck(False, report.num_complex, orders, report, "leading coefficient vanishes at a solution")
    for d in range(D + 1):
        w = coeffs.get(d, UniPoly([]))
        if not ((lead.scale(P[d]) - w) % e).is_zero():
            return WronskianCheck(False, report.num_complex, orders, report, f"t^{d} coefficient mismatch")
    if D + sum(lam.size for lam, pt in system.instance.assignment if pt.is_infinite) != k * (n - k):
        return WronskianCheck(False, report.num_complex, orders, report, "orders do not sum to k(n-k)")
    return WronskianCheck(True, report.num_complex, orders, report)
