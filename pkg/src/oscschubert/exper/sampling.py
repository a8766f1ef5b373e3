"""Seeded sampling of osculating instances of a prescribed osculation type."""

from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from ..combinat import SchubertProblemSpec
from ..exactalg import GaussianRational
from ..schubert import INF, OsculatingInstance, OsculationPoint, OsculationType

__all__ = ["sample_instance", "derive_seed", "MAX_POINT_TRIES"]

MAX_POINT_TRIES = 200


def derive_seed(master_seed: int, osc_type: OsculationType, index: int, attempt: int = 0) -> int:
    """64-bit seed for one sampling attempt, independent of scheduling order."""
    if master_seed < 0:
        raise ValueError("master_seed must be nonnegative")
    key = tuple(osc_type.as_tuple()) + (index, attempt)
    ss = np.random.SeedSequence(master_seed, spawn_key=key)
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _real_point(rng: np.random.Generator, bound: int) -> OsculationPoint:
    den = int(rng.integers(1, 3))  # integers and halves
    num = int(rng.integers(-bound * den, bound * den + 1))
    return OsculationPoint(GaussianRational(mpq(num, den), mpq(0)))


def _complex_point(rng: np.random.Generator, bound: int) -> OsculationPoint:
    re = int(rng.integers(-bound, bound + 1))
    im = int(rng.integers(1, bound + 1))
    return OsculationPoint(GaussianRational(mpq(re), mpq(im)))


def sample_instance(
    problem: SchubertProblemSpec,
    osc_type: OsculationType,
    rng: np.random.Generator,
    point_range: int = 10,
    anchor: bool = True,
) -> OsculatingInstance:
    """Random instance of ``problem`` whose osculation type is ``osc_type``.

    Real points are integers or halves in [-R, R]; conjugate pairs are
    p +- q i with integers |p| <= R, 1 <= q <= R. With ``anchor`` the first
    two real slots, taken from the largest conditions, get infinity and 0
    so the solver's chart needs no change of coordinates. All points are
    distinct; after ``MAX_POINT_TRIES`` collisions the range is doubled.
    The assignment is listed in the problem's expanded condition order.
    """
    if isinstance(problem, str):
        problem = SchubertProblemSpec.parse(problem)
    if point_range < 2:
        raise ValueError("point_range must be at least 2")
    if not osc_type.is_admissible_for(problem):
        raise ValueError(f"osculation type {osc_type} is not admissible for {problem.to_text()}")
    slots = []  # (partition, is_real)
    for (lam, r), a in zip(osc_type.counts, problem.multiplicities):
        slots.extend([(lam, True)] * r)
        slots.extend([(lam, False)] * ((a - r) // 2))
    order = sorted(range(len(slots)), key=lambda i: (not slots[i][1], -slots[i][0].size, i))
    used: set = set()
    assignment = []
    fixed = [INF, OsculationPoint(0)] if anchor else []
    bound = point_range
    for idx in order:
        lam, real = slots[idx]
        if real and fixed:
            pt = fixed.pop(0)
            used.add(pt)
            assignment.append((lam, pt))
            continue
        tries = 0
        while True:
            pt = _real_point(rng, bound) if real else _complex_point(rng, bound)
            if pt not in used and pt.conjugate() not in used:
                break
            tries += 1
            if tries >= MAX_POINT_TRIES:
                bound *= 2
                tries = 0
        used.add(pt)
        assignment.append((lam, pt))
        if not real:
            used.add(pt.conjugate())
            assignment.append((lam, pt.conjugate()))
    rank = {lam: i for i, lam in enumerate(problem.partitions)}
    assignment.sort(key=lambda item: rank[item[0]])  # stable: expanded condition order
    return OsculatingInstance(problem, tuple(assignment))
