"""Eliminants, shape position and real/complex solution counts."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import DegeneracyError
from ..exactalg import MultiPoly, UniPoly, is_squarefree, squarefree_part, sturm_count_real_roots
from .buchberger import Budgets, PolySystem
from .fglm import lex_basis

__all__ = [
    "SolveReport",
    "eliminant",
    "is_shape_position",
    "variable_order",
    "solve_system",
    "solve_instance",
    "MAX_RETRIES",
    "RANDOM_BOUND",
]

MAX_RETRIES = 5
RANDOM_BOUND = 20
SHAPE_VAR = "z"


@dataclass(frozen=True)
class SolveReport:
    """Outcome of solving one zero-dimensional system.

    ``randomization`` maps each non-last variable to the integer c_j used in
    ``last = z - sum c_j x_j`` (empty when no change of variables was needed).
    ``reason`` is empty for transversal solves, otherwise a short code:
    ``multiple-root``, ``too-few-solutions`` or ``no-shape-position``.
    """

    num_complex: int
    num_real: int
    eliminant: UniPoly
    transversal: bool
    chart_used: str
    randomization: tuple = ()
    variables: tuple = ()
    basis: tuple = field(default=(), compare=False, repr=False)
    attempts: int = 1
    reason: str = ""
    expected: int | None = None


def variable_order(variables: Sequence[str], equations: Sequence[MultiPoly]) -> tuple[str, ...]:
    """Row-major order with the variable occurring in fewest equations moved last."""
    variables = tuple(variables)
    if not variables:
        return variables
    counts = Counter()
    for eq in equations:
        counts.update(eq.used_variables())
    # ties go to the latest variable in row-major order
    last = min(reversed(variables), key=lambda v: counts.get(v, 0))
    return tuple(v for v in variables if v != last) + (last,)


def eliminant(basis: Sequence[MultiPoly], last_variable: str) -> UniPoly:
    """The basis element univariate in ``last_variable``.

    Raises :class:`DegeneracyError` when the ideal is not zero-dimensional.
    The unit ideal yields the constant 1 (no solutions).
    """
    if not basis:
        raise DegeneracyError("empty basis: the ideal is zero, not zero-dimensional")
    variables = basis[0].variables
    if len(basis) == 1 and basis[0].is_constant():
        return UniPoly([1])
    for v in variables:
        if not any(_is_pure_power(g.leading_term()[0], variables.index(v)) for g in basis):
            raise DegeneracyError(f"positive-dimensional ideal: no leading term is a power of {v}")
    for g in basis:
        used = g.used_variables()
        if used == (last_variable,):
            return g.to_unipoly(last_variable)
    raise DegeneracyError(f"no univariate element in {last_variable}")


def _is_pure_power(exps: tuple, i: int) -> bool:
    return exps[i] > 0 and all(e == 0 for j, e in enumerate(exps) if j != i)


def is_shape_position(basis: Sequence[MultiPoly]) -> bool:
    """True when the reduced lex basis is {x_j - phi_j(z)} plus one univariate."""
    if not basis or basis[0].is_constant():
        return True
    variables = basis[0].variables
    nv = len(variables)
    if len(basis) != nv:
        return False
    last = variables[-1]
    for j, g in enumerate(basis[:-1]):
        lead = g.leading_term()[0]
        if lead != tuple(1 if i == j else 0 for i in range(nv)):
            return False
        if set(g.used_variables()) - {variables[j], last}:
            return False
    return basis[-1].used_variables() in ((last,), ())


def _randomize(equations, order, rng: random.Random):
    others, last = order[:-1], order[-1]
    coeffs = []
    for _ in others:
        c = 0
        while c == 0:
            c = rng.randint(-RANDOM_BOUND, RANDOM_BOUND)
        coeffs.append(c)
    new_vars = tuple(others) + (SHAPE_VAR if SHAPE_VAR not in order else "_" + SHAPE_VAR,)
    z = MultiPoly.var(new_vars, new_vars[-1])
    replacement = z
    for v, c in zip(others, coeffs):
        replacement = replacement - MultiPoly.var(new_vars, v) * c
    new_eqs = []
    for eq in equations:
        lifted = eq.with_variables(tuple(order) + (new_vars[-1],))
        sub = lifted.substitute({last: replacement.with_variables(lifted.variables)})
        new_eqs.append(sub.with_variables(new_vars))
    return new_vars, new_eqs, tuple(zip(others, coeffs))


def solve_system(
    variables: Sequence[str],
    equations: Sequence[MultiPoly],
    expected: int | None = None,
    seed: int = 0,
    chart: str = "",
    budgets: Budgets | None = None,
    keep_basis: bool = False,
    strategy: str = "fglm",
) -> SolveReport:
    """Count complex and real solutions of a zero-dimensional system over Q.

    The lex basis is computed in row-major order with the least-used variable
    last. If the basis is not in shape position the last variable is replaced
    by ``z - sum c_j x_j`` with random nonzero |c_j| <= 20 (at most five
    retries, seeded by ``seed``). ``strategy`` selects how the lex basis is
    obtained (see :func:`lex_basis`); the basis itself does not depend on it.
    """
    order = variable_order(variables, equations)
    rng = random.Random(seed)
    vars_now, eqs_now, randomization = order, list(equations), ()
    attempts = 0
    while True:
        attempts += 1
        basis = lex_basis(PolySystem(vars_now, tuple(eqs_now)), strategy, budgets)
        elim = eliminant(basis, vars_now[-1])
        if elim.degree <= 0:
            return SolveReport(
                0, 0, elim, expected == 0, chart, randomization, vars_now,
                tuple(basis) if keep_basis else (), attempts,
                "" if expected == 0 else "too-few-solutions", expected,
            )
        if not is_squarefree(elim):
            return _report(elim, False, "multiple-root", chart, randomization, vars_now, basis, keep_basis, attempts, expected)
        if is_shape_position(basis):
            deg = elim.degree
            if expected is not None and deg > expected:
                raise DegeneracyError(
                    f"{deg} solutions found but the problem has only {expected}",
                    found=deg,
                    expected=expected,
                )
            ok = expected is None or deg == expected
            return _report(elim, ok, "" if ok else "too-few-solutions", chart, randomization, vars_now, basis, keep_basis, attempts, expected)
        if attempts > MAX_RETRIES:
            return _report(elim, False, "no-shape-position", chart, randomization, vars_now, basis, keep_basis, attempts, expected)
        vars_now, eqs_now, randomization = _randomize(equations, order, rng)


def _report(elim, transversal, reason, chart, randomization, variables, basis, keep_basis, attempts, expected):
    sf = squarefree_part(elim)
    return SolveReport(
        num_complex=sf.degree,
        num_real=sturm_count_real_roots(sf),
        eliminant=elim.monic(),
        transversal=transversal,
        chart_used=chart,
        randomization=randomization,
        variables=tuple(variables),
        basis=tuple(basis) if keep_basis else (),
        attempts=attempts,
        reason=reason,
        expected=expected,
    )


def solve_instance(
    instance,
    expected: int | None = None,
    seed: int = 0,
    budgets: Budgets | None = None,
    keep_basis: bool = False,
    strategy: str = "fglm",
) -> SolveReport:
    """Solve an osculating instance in its greedy chart.

    When the double chart (anchors at infinity and zero) yields fewer
    solutions than expected, the instance is re-solved in the chart at
    infinity alone, which parameterizes the whole Schubert cell.
    """
    return _solve_instance(instance, expected, seed, budgets, keep_basis, strategy)[1]


def _solve_instance(instance, expected, seed, budgets, keep_basis, strategy):
    from ..combinat import complex_count
    from ..schubert import instance_system

    if expected is None:
        expected = complex_count(instance.problem)
    system = instance_system(instance)
    report = solve_system(
        system.variables,
        system.equations,
        expected=expected,
        seed=seed,
        chart=system.chart.descriptor(),
        budgets=budgets,
        keep_basis=keep_basis,
        strategy=strategy,
    )
    if report.reason == "too-few-solutions" and system.chart.at_zero is not None:
        system = instance_system(instance, use_zero=False)
        report = solve_system(
            system.variables,
            system.equations,
            expected=expected,
            seed=seed,
            chart=system.chart.descriptor(),
            budgets=budgets,
            keep_basis=keep_basis,
            strategy=strategy,
        )
    return system, report
