"""Littlewood-Richardson products truncated to a rectangle, and solution counts."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ..errors import ResourceError
from .partitions import Partition, SchubertProblemSpec

__all__ = ["lr_product", "lr_coefficient", "complex_count", "DEFAULT_TERM_BUDGET"]

DEFAULT_TERM_BUDGET = 10**6


def _horizontal_strips(shape: tuple[int, ...], m: int, rows: int, width: int, min_row: int):
    """Ways to add ``m`` boxes as a horizontal strip, no box above row ``min_row``.

    Yields ``(new_shape, added)`` where ``added[r]`` is the number of boxes
    placed in row r.
    """
    shape = shape + (0,) * (rows - len(shape))

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                yield acc
            return
        cap = width if r == 0 else shape[r - 1]
        top = 0 if r < min_row else min(left, cap - shape[r])
        for a in range(top, -1, -1):
            yield from rec(r + 1, left - a, acc + [a])

    for added in rec(0, m, []):
        yield tuple(s + a for s, a in zip(shape, added)), added


def _is_lattice(rows_labels: list[list[int]]) -> bool:
    counts: Counter = Counter()
    for row in rows_labels:
        for lab in reversed(row):
            counts[lab] += 1
            if lab > 1 and counts[lab] > counts[lab - 1]:
                return False
    return True


@lru_cache(maxsize=None)
def lr_product(alpha: Partition, lam: Partition, k: int, width: int) -> dict[Partition, int]:
    """``s_alpha * s_lam`` restricted to partitions inside the k x width box.

    Coefficients come from enumerating Littlewood-Richardson skew tableaux of
    shape ``nu/alpha`` and content ``lam``: successive horizontal strips of
    1s, 2s, ... whose reverse reading word is a lattice word.
    """
    out: Counter = Counter()
    base = tuple(alpha) + (0,) * (k - len(alpha))
    if len(alpha) > k or (alpha and alpha[0] > width):
        return {}

    def rec(shape: tuple[int, ...], label: int, filling: list[list[int]]):
        if label > len(lam):
            if _is_lattice(filling):
                out[Partition(shape)] += 1
            return
        for new_shape, added in _horizontal_strips(shape, lam[label - 1], k, width, label - 1):
            new_filling = [row + [label] * a for row, a in zip(filling, added)]
            rec(new_shape, label + 1, new_filling)

    rec(base, 1, [[] for _ in range(k)])
    return dict(out)


def lr_coefficient(nu, lam, mu) -> int:
    """c^nu_{lam,mu} (no truncation beyond nu's own bounding box)."""
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    k = max(len(nu), 1)
    width = nu[0] if nu else 0
    return lr_product(lam, mu, k, width).get(nu, 0)


def complex_count(problem: SchubertProblemSpec, term_budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Number of complex solutions: coefficient of the full rectangle class."""
    k, width = problem.k, problem.n - problem.k
    state: dict[Partition, int] = {Partition(): 1}
    for lam in sorted(problem.expanded(), key=lambda p: -p.size):
        nxt: Counter = Counter()
        for alpha, c in state.items():
            for nu, d in lr_product(alpha, lam, k, width).items():
                nxt[nu] += c * d
        state = dict(nxt)
        if len(state) > term_budget:
            raise ResourceError(
                f"intermediate Schur expansion has {len(state)} terms (budget {term_budget})",
                terms=len(state),
            )
    return state.get(Partition([width] * k), 0)
