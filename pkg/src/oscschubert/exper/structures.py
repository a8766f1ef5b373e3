"""Structural laws that frequency tables of real solutions must obey."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..combinat import (
    Partition,
    SchubertProblemSpec,
    SkewShape,
    complement,
    complex_count,
    diag_length,
    is_symmetric,
    predicted_real_counts,
    sign_imbalance,
)
from ..errors import ResourceError
from ..hookfam import is_hook_problem
from .tables import FrequencyTable

__all__ = ["LawResult", "StructureReport", "check_structures", "lower_bound_shape"]


@dataclass(frozen=True)
class LawResult:
    name: str
    applicable: bool
    passed: bool
    detail: str = ""
    informational: bool = False  # reported, never a violation


@dataclass
class StructureReport:
    problem: str
    laws: list = field(default_factory=list)

    @property
    def violations(self) -> list[LawResult]:
        return [l for l in self.laws if l.applicable and not l.passed and not l.informational]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [f"structure report for {self.problem}"]
        for l in self.laws:
            if not l.applicable:
                status = "n/a "
            elif l.informational:
                status = "info"
            else:
                status = "PASS" if l.passed else "FAIL"
            lines.append(f"  [{status}] {l.name}" + (f": {l.detail}" if l.detail else ""))
        lines.append("OK" if self.ok else f"{len(self.violations)} violation(s)")
        return "\n".join(lines) + "\n"


def lower_bound_shape(problem: SchubertProblemSpec):
    """(lam, mu) when the problem is lam (at infinity), mu (at 0) and points (1); else None.

    Conditions other than (1) must number at most two (with multiplicity);
    the larger is lam. Returns None if mu does not fit inside lam's complement.
    """
    others = [p for p in problem.expanded() if p != Partition((1,))]
    if len(others) > 2:
        return None
    others.sort(key=lambda p: (p.size, p), reverse=True)
    lam = others[0] if others else Partition()
    mu = others[1] if len(others) > 1 else Partition()
    lc = complement(lam, problem.k, problem.n)
    if not lc.contains(mu):
        return None
    return lam, mu


def check_structures(table: FrequencyTable, problem: SchubertProblemSpec | str) -> StructureReport:
    """Evaluate every applicable law on a nonempty table."""
    if isinstance(problem, str):
        problem = SchubertProblemSpec.parse(problem)
    if table.is_empty:
        raise ValueError("structure checks need a nonempty table")
    if table.problem != problem.to_text():
        raise ValueError(f"table is for {table.problem}, not {problem.to_text()}")
    report = StructureReport(problem.to_text())
    N = complex_count(problem)
    laws = report.laws
    laws.append(LawResult("complex count", True, table.num_complex == N, f"table {table.num_complex}, Schubert calculus {N}"))

    bad = sorted({c for t in table.rows for c in table.observed(t) if (N - c) % 2})
    laws.append(LawResult("parity", True, not bad, f"odd-parity counts {bad}" if bad else "every count = N mod 2"))

    all_real = tuple(problem.multiplicities)
    if all_real in table.rows:
        seen = table.observed(all_real)
        laws.append(LawResult("MTV (all-real row)", True, seen == {N}, f"observed {sorted(seen)}"))
    else:
        laws.append(LawResult("MTV (all-real row)", False, True, "all-real row not sampled"))

    shape = lower_bound_shape(problem)
    if shape is None:
        laws.append(LawResult("sign-imbalance lower bound", False, True, "problem is not of the form lam, mu, 1^m"))
    else:
        lam, mu = shape
        try:
            sigma = sign_imbalance(SkewShape(complement(lam, problem.k, problem.n), mu))
        except ResourceError as exc:
            sigma = None
            laws.append(LawResult("sign-imbalance lower bound", False, True, str(exc)))
    if shape is not None and sigma is not None:
        fixed = [i for i, p in enumerate(problem.partitions) if p != Partition((1,))]
        rows = [t for t in table.rows if all(t[i] == problem.multiplicities[i] for i in fixed)]
        low = {t: min(table.observed(t)) for t in rows}
        failing = sorted(t for t, m in low.items() if m < sigma)
        laws.append(LawResult(
            "sign-imbalance lower bound",
            bool(rows),
            not failing,
            f"sigma = {sigma}; row minima {dict(sorted(low.items(), reverse=True))}"
            + (f"; below bound in rows {failing}" if failing else ""),
        ))

    k, n = problem.k, problem.n
    symmetric = n == 2 * k and all(is_symmetric(p) for p in problem.partitions)
    ell = sum(diag_length(p) for p in problem.expanded()) if symmetric else 0
    if symmetric and ell >= k + 4:
        bad = sorted({c for t in table.rows for c in table.observed(t) if (N - c) % 4})
        laws.append(LawResult("mod 4 congruence", True, not bad, f"sum of diagonals {ell}; counts != N mod 4: {bad}"))
    else:
        laws.append(LawResult("mod 4 congruence", False, True, "needs a symmetric problem in Gr(k,2k) with sum l(lambda) >= k+4"))

    if is_hook_problem(problem):
        i1 = problem.partitions.index(Partition((1,)))
        outside, unattained = {}, {}
        for t in table.rows:
            allowed = predicted_real_counts(k, n, t[i1])
            extra = sorted(table.observed(t) - set(allowed))
            if extra:
                outside[t] = extra
            if min(table.observed(t)) != allowed[0]:
                unattained[t] = (allowed[0], min(table.observed(t)))
        laws.append(LawResult("hook family support", True, not outside, f"counts outside predicted sets: {outside}" if outside else "all counts predicted"))
        laws.append(LawResult(
            "hook family lower bound attained",
            True,
            not unattained,
            f"(predicted, observed minimum) {unattained}" if unattained else "every row attains nu(k,n,r_box-1)",
            informational=True,
        ))
    else:
        laws.append(LawResult("hook family support", False, True, "not a hook-family problem"))
    return report
