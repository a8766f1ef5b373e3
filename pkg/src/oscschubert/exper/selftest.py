"""Built-in invariant suites for ``oscschubert selftest``.

These are quick sanity checks for an installed copy; the full test suite
lives in the repository's ``tests/`` directory.
"""

from __future__ import annotations

import time
from math import comb

import numpy as np

from ..combinat import SchubertProblemSpec, complex_count, hook_problem, multinomial, nu, sign_imbalance
from ..exactalg import UniPoly
from ..groebner import solve_instance
from ..hookfam import HookInstance, mod4_factorization_census, predicted_real_count, solve_direct, verify_det_identity
from ..schubert import OsculationType
from .sampling import sample_instance

__all__ = ["run_selftest", "SUITES"]


def _counts():
    cases = {
        "GR(2,4): 1^4": 2, "GR(2,5): 1^6": 5, "GR(3,6): 1^9": 42, "GR(3,6): 2.1^2, 1^3": 6,
        "GR(2,8): 5, 1^7": 6, "GR(4,8): 3.3.3, 1^7": 20, "GR(4,8): 3.1^4": 9,
    }
    return all(complex_count(SchubertProblemSpec.parse(p)) == v for p, v in cases.items())


def _hook_counts():
    return all(
        complex_count(hook_problem(k, n)) == comb(n - 2, k - 1)
        for n in range(5, 9) for k in range(2, n - 1)
    )


def _sign_imbalance():
    if sign_imbalance("3.1.1") != 2:
        return False
    for n in range(4, 9):
        for k in range(2, n - 1):
            hook = f"{n - k}" + ".1" * (k - 1)
            if sign_imbalance(hook) != multinomial((n - 2) // 2, (k - 1) // 2, (n - k - 1) // 2):
                return False
    return True


def _nu():
    return [nu(5, 13, r) for r in range(1, 12, 2)] == [10, 18, 38, 78, 162, 330] and [nu(4, 8, r) for r in range(0, 7, 2)] == [0, 4, 8, 20]


def _identity():
    return all(verify_det_identity(k, n) for k, n in [(2, 4), (2, 5), (3, 6)])


def _census():
    f = UniPoly.from_roots([]) * UniPoly([1, 0, 1]) * UniPoly([4, 0, 1]) * UniPoly([9, 0, 1])
    nonreal, selfconj = mod4_factorization_census(f, 3)
    return nonreal % 4 == 0 and selfconj == 8


def _solver_small():
    problem = SchubertProblemSpec.parse("GR(2,4): 1^4")
    rng = np.random.default_rng(7)
    for otype in OsculationType.all_for(problem):
        for _ in range(3):
            rep = solve_instance(sample_instance(problem, otype, rng))
            if (rep.num_complex - rep.num_real) % 2:
                return False
            if otype.as_tuple() == (4,) and rep.num_real != 2:
                return False
    return True


def _hook_agreement():
    inst = HookInstance(3, 6, (1, 2, -1, "1+i", "1-i"))
    chart = solve_instance(inst.to_osculating())
    direct = solve_direct(inst)
    return chart.num_real == direct.num_real == predicted_real_count(inst)


SUITES = [
    ("complex counts", _counts, False),
    ("hook-family complex counts", _hook_counts, False),
    ("sign-imbalance", _sign_imbalance, False),
    ("nu tables", _nu, False),
    ("determinant identity", _identity, False),
    ("mod-4 census", _census, False),
    ("solver parity and MTV on (1)^4", _solver_small, True),
    ("hook family chart vs factorization", _hook_agreement, True),
]


def run_selftest(full: bool = False, out=print) -> bool:
    ok = True
    for name, fn, slow in SUITES:
        if slow and not full:
            continue
        start = time.perf_counter()
        try:
            passed = bool(fn())
        except Exception as exc:  # report and keep going
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'} {name} [{time.perf_counter() - start:.2f}s]")
    out("selftest " + ("passed" if ok else "FAILED"))
    return ok
