"""The hook family: H matrix, determinant identity, factorization counts."""

import random
from itertools import combinations
from math import comb

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from oscschubert.combinat import admissible_derivative_root_counts, complex_count, hook_problem, nu
from oscschubert.errors import DegeneracyError
from oscschubert.exactalg import UniPoly, rank
from oscschubert.groebner import solve_instance
from oscschubert.hookfam import (
    FactorizationPair,
    H_matrix,
    HookInstance,
    direct_system,
    hook_constants,
    hook_instance_from,
    is_hook_problem,
    mod4_factorization_census,
    predicted_real_count,
    solve_direct,
    verify_det_identity,
)
from oscschubert.schubert import Mobius, OsculatingInstance, OsculationPoint


def real_factorizations(r, c, m):
    """Conjugation-closed m-subsets of r real roots and c pairs."""
    return sum(comb(c, j) * comb(r, m - 2 * j) for j in range(m // 2 + 1) if m - 2 * j >= 0)


def random_points(rng, n_pts, n_real):
    pts = set()
    while len(pts) < n_real:
        pts.add(mpq(rng.randint(-20, 20), rng.randint(1, 3)))
    out = [str(p) for p in pts]
    seen = set()
    while len(out) < n_pts:
        a, b = rng.randint(-6, 6), rng.randint(1, 6)
        if (a, b) in seen:
            continue
        seen.add((a, b))
        out += [f"{a}+{b}*i", f"{a}-{b}*i"]
    return out


# -- detection and instances --------------------------------------------------------


def test_is_hook_problem():
    assert is_hook_problem(hook_problem(3, 7))
    assert is_hook_problem(hook_problem(4, 8))
    assert not is_hook_problem(hook_problem(2, 4))  # (1)^4 has no distinguished condition
    from oscschubert.combinat import SchubertProblemSpec

    assert not is_hook_problem(SchubertProblemSpec.parse("GR(3,6): 2.1^2, 1^3"))


def test_hook_instance_validation():
    with pytest.raises(ValueError):
        HookInstance(3, 6, ["1", "2", "3", "4"])
    with pytest.raises(ValueError):
        HookInstance(3, 6, ["1", "2", "3", "4", "i"])
    with pytest.raises(ValueError):
        HookInstance(3, 6, ["1", "2", "3", "4", "inf"])
    inst = HookInstance(3, 6, ["1", "2", "-1", "1+i", "1-i"])
    assert inst.r_box == 3
    assert inst.f == UniPoly.from_roots([1, 2, -1]) * UniPoly([2, -2, 1])


def test_hook_instance_from_moves_box_to_infinity():
    box = hook_problem(3, 6).partitions[0]
    pts = ["1", "2", "-1", "1+i", "1-i"]
    osc = OsculatingInstance(hook_problem(3, 6), ((box, OsculationPoint.of("5")),) + tuple(((1,), p) for p in pts))
    moved = hook_instance_from(osc)
    phi = Mobius(0, 1, 1, -5)  # 1/(t - 5)
    assert set(moved.points) == {phi(OsculationPoint.of(p)) for p in pts}
    assert moved.r_box == 3


# -- H matrix ----------------------------------------------------------------------


def test_constants():
    assert hook_constants(2, 4) == [1, -1]
    assert hook_constants(3, 7) == [6, -2, 1, -1]  # (-1)^(5-i) (4-i)!


def test_h_matrix_gr24():
    f0, g0, h0 = mpq(3), mpq(5), mpq(7)
    M = H_matrix(f0, [g0, 1], [h0, 1])
    assert [list(r) for r in M.rows] == [[1, -g0, f0 / h0, 0], [0, 0, -1, h0]]


@pytest.mark.parametrize("k, n", [(2, 5), (3, 6), (3, 7), (4, 8)])
def test_h_matrix_has_rank_k(k, n):
    rng = random.Random(k * n)
    g = [mpq(rng.randint(-5, 5)) for _ in range(n - k - 1)] + [1]
    h = [mpq(rng.randint(1, 5)) for _ in range(k - 1)] + [1]
    M = H_matrix(mpq(2), g, h)
    assert M.shape == (k, n) and rank(M) == k


def test_h_matrix_rejects_non_monic():
    with pytest.raises(ValueError):
        H_matrix(1, [1, 2], [1, 1])
    with pytest.raises(ValueError):
        H_matrix(1, [1, 1], [0, 1])


# -- determinant identity ------------------------------------------------------------


@pytest.mark.parametrize("k, n", [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (3, 7), (4, 8)])
def test_det_identity_symbolic(k, n):
    assert verify_det_identity(k, n, mode="symbolic")


@pytest.mark.parametrize("k, n", [(4, 10), (5, 11)])
def test_det_identity_random(k, n):
    assert verify_det_identity(k, n, mode="random", trials=3)


@pytest.mark.parametrize("k, n", [(2, 5), (3, 6)])
def test_det_identity_negative_control(k, n):
    c = hook_constants(k, n)
    c[0] = c[0] + 1
    assert not verify_det_identity(k, n, constants=c, mode="symbolic")
    assert not verify_det_identity(k, n, constants=c, mode="random")


# -- factorization counts --------------------------------------------------------------


def test_direct_system_gr24():
    # n = 4, k = 2: g, h linear monic; g*h = f'/3 is one quadratic in one unknown pair
    inst = HookInstance(2, 4, ["0", "1", "-1"])
    sys_ = direct_system(inst)
    assert sys_.variables == ("g0", "h0")
    r = solve_direct(inst)
    assert r.num_complex == 2 and r.num_real == 2  # f' = 3t^2 - 1 has two real roots


def test_factorization_pair_check():
    # g = t - 1, h = t^2 + 2, so f = 4 * integral(g h) has degree n - 1 = 4
    g, h = UniPoly([-1, 1]), UniPoly([2, 0, 1])
    f = UniPoly([0, -8, 4, mpq(-4, 3), 1])
    assert f.derivative() == (g * h).scale(4)
    assert FactorizationPair(g, h).check(f)
    assert not FactorizationPair(g.scale(2), h.scale(mpq(1, 2))).check(f)  # not monic
    assert not FactorizationPair(UniPoly([1, 1]), h).check(f)


@pytest.mark.parametrize("k, n, n_real", [(2, 5, 4), (2, 5, 2), (2, 5, 0), (3, 7, 6), (3, 7, 2), (2, 6, 1), (3, 6, 3)])
def test_direct_count_matches_combinatorics(k, n, n_real):
    rng = random.Random(100 * n + n_real)
    for _ in range(3):
        inst = HookInstance(k, n, random_points(rng, n - 1, n_real))
        try:
            r_deriv = inst.derivative_real_roots()
        except DegeneracyError:
            continue
        rep = solve_direct(inst)
        assert rep.num_complex == comb(n - 2, k - 1)
        c = (n - 2 - r_deriv) // 2
        # independent oracle: subsets of roots of f' closed under conjugation
        assert rep.num_real == real_factorizations(r_deriv, c, k - 1) == nu(k, n, r_deriv)


def test_chart_and_direct_agree_on_gr36():
    inst = HookInstance(3, 6, ["1", "2", "-1", "1+i", "1-i"])
    chart = solve_instance(inst.to_osculating())
    direct = solve_direct(inst)
    assert chart.transversal and direct.transversal
    assert chart.num_complex == direct.num_complex == complex_count(hook_problem(3, 6)) == 6
    assert chart.num_real == direct.num_real == predicted_real_count(inst) == 2


def test_predicted_counts_examples():
    inst = HookInstance(2, 8, [str(x) for x in range(1, 8)])
    assert predicted_real_count(inst) == 6
    assert nu(5, 13, 11) == 330


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=5, max_value=10), st.data())
def test_rolle_window(n, data):
    r_box = data.draw(st.sampled_from(list(range((n - 1) % 2, n, 2))))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    inst = HookInstance(2, n, random_points(random.Random(seed), n - 1, r_box))
    try:
        r = inst.derivative_real_roots()
    except DegeneracyError:
        return
    assert r in admissible_derivative_root_counts(n, r_box)


# -- mod 4 census ---------------------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4])
def test_census_closed_forms(m):
    for r in range(0, 2 * m + 1, 2):
        f = UniPoly([1])
        for x in random.Random(r).sample(range(-30, 30), r):
            f = f * UniPoly([-x, 1])
        for j in range((2 * m - r) // 2):
            f = f * UniPoly([j * j + (j + 1) ** 2, -2 * j, 1])  # roots j +- (j+1) i
        nonreal, selfconj = mod4_factorization_census(f, m)
        c = (2 * m - r) // 2
        assert nonreal == comb(2 * m, m) - real_factorizations(r, c, m)
        assert selfconj == (2**m if r == 0 else 0)
        assert (nonreal - selfconj) % 4 == 0


def test_census_gr48_all_complex():
    f = UniPoly([1])
    for j in range(3):
        f = f * UniPoly([1 + j * j, -2 * j, 1])
    assert mod4_factorization_census(f, 3) == (20, 8)


@pytest.mark.parametrize("k", range(3, 9))
def test_mod4_identity(k):
    for r in range(0, 2 * k - 1, 2):
        assert (comb(2 * k - 2, k - 1) - nu(k, 2 * k, r)) % 4 == 0


def test_census_brute_force_small():
    # label check against a literal enumeration with explicit complex roots
    roots = [1, 2, complex(0, 1), complex(0, -1)]
    f = UniPoly.from_roots([1, 2]) * UniPoly([1, 0, 1])
    total = nonreal = 0
    for s in combinations(range(4), 2):
        total += 1
        vals = {roots[i] for i in s}
        if {v.conjugate() if isinstance(v, complex) else v for v in vals} != vals:
            nonreal += 1
    assert mod4_factorization_census(f, 2)[0] == nonreal
    assert total == comb(4, 2)
