"""Partitions, tableaux, sign-imbalance, LR counts and nu, with independent oracles."""

from itertools import permutations
from math import comb, factorial, prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oscschubert.combinat import (
    Partition,
    SchubertProblemSpec,
    SkewShape,
    admissible_derivative_root_counts,
    complement,
    complex_count,
    diag_length,
    enumerate_tableaux,
    gaussian_binomial_at_minus_one,
    hook_complement,
    hook_problem,
    is_symmetric,
    lr_coefficient,
    multinomial,
    nu,
    partitions_in_box,
    predicted_real_counts,
    sign_imbalance,
    tableau_sign,
)
from oscschubert.errors import ResourceError


def hook_length_count(lam):
    """Frame-Robinson-Thrall: number of SYT of a straight shape."""
    lam = list(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = [lam[i] - j - 1 + conj[j] - i for i in range(len(lam)) for j in range(lam[i])]
    return factorial(sum(lam)) // prod(hooks)


def brute_force_tableaux(shape: SkewShape):
    """Count standard fillings by trying every permutation (small shapes only)."""
    cells = shape.cells()
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        where = dict(zip(cells, perm))
        if all(
            (where.get((r, c + 1), 10**9) > v) and (where.get((r + 1, c), 10**9) > v)
            for (r, c), v in where.items()
        ):
            count += 1
    return count


# -- partitions ---------------------------------------------------------------


def test_partition_parse_and_text():
    lam = Partition.parse("3.1.1")
    assert lam == (3, 1, 1) and lam.size == 5 and str(lam) == "3.1.1"
    assert lam.transpose() == (3, 1, 1)
    assert lam.padded(4) == (3, 1, 1, 0)
    assert lam.fits(3, 6) and not lam.fits(2, 6)


def test_complement_and_hook():
    assert complement((2, 1), 3, 6) == (3, 2, 1)
    assert complement((3, 3, 3), 4, 8) == (4, 1, 1, 1)
    assert hook_complement(4, 8) == (3, 3, 3)
    assert complement(hook_complement(3, 7), 3, 7) == (4, 1, 1)


def test_symmetric_and_diagonal():
    assert is_symmetric((3, 1, 1)) and diag_length((3, 1, 1)) == 1
    assert is_symmetric((3, 3, 3)) and diag_length((3, 3, 3)) == 3
    assert not is_symmetric((2,))


def test_problem_grammar():
    p = SchubertProblemSpec.parse("GR(3,6): 2.1^2, 1^3")
    assert (p.k, p.n) == (3, 6)
    assert p.partitions == ((2, 1), (1,))
    assert p.multiplicities == (2, 3)
    assert SchubertProblemSpec.parse(p.to_text()) == p
    with pytest.raises(ValueError):
        SchubertProblemSpec.parse("GR(3,6): 2.1^2, 1^2")  # weights do not fill the box
    with pytest.raises(ValueError):
        SchubertProblemSpec.parse("GR(3,6) 2.1")


def test_partitions_in_box_count():
    # C(a+b, a) partitions fit in an a x b box
    assert sum(1 for _ in partitions_in_box(3, 4)) == comb(7, 3)


# -- tableaux -------------------------------------------------------------------


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 2), (3, 3), (4, 2, 1), (3, 3, 3), (4, 1, 1, 1)])
def test_tableau_count_hook_length(lam):
    assert len(enumerate_tableaux(SkewShape(lam))) == hook_length_count(lam)


@pytest.mark.parametrize("text", ["4.4.1/1", "3.2/1", "3.3/2", "3.2.1/2.1", "4.3.1/2.1"])
def test_skew_tableau_count_brute_force(text):
    shape = SkewShape.parse(text)
    tabs = enumerate_tableaux(shape)
    assert len(tabs) == brute_force_tableaux(shape)
    assert len({t.word for t in tabs}) == len(tabs)


def test_first_tableau_is_standard_filling():
    shape = SkewShape.parse("4.4.1/1")
    first = enumerate_tableaux(shape)[0]
    assert first.word == tuple(range(1, shape.size + 1))
    assert tableau_sign(first) == 1


def test_single_swap_is_odd():
    # shape (2,2): standard filling 12/34 and 13/24 differ by one transposition
    tabs = {t.word: t for t in enumerate_tableaux(SkewShape((2, 2)))}
    assert tableau_sign(tabs[(1, 2, 3, 4)]) == 1
    assert tableau_sign(tabs[(1, 3, 2, 4)]) == -1


def test_full_hook_has_binomial_many_tableaux():
    for n in range(4, 10):
        for k in range(2, n - 1):
            hook = Partition([n - k] + [1] * (k - 1))
            assert len(enumerate_tableaux(SkewShape(hook))) == comb(n - 2, k - 1)


def test_tableau_budget():
    with pytest.raises(ResourceError):
        enumerate_tableaux(SkewShape((4, 4, 4, 4)))


# -- sign-imbalance -------------------------------------------------------------


def test_sign_imbalance_311():
    assert sign_imbalance("3.1.1") == 2


@pytest.mark.parametrize("k, w", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)])
def test_rectangle_sign_imbalance_parity(k, w):
    # zero when n = k + w is even, positive when n is odd
    s = sign_imbalance(SkewShape((w,) * k))
    if (k + w) % 2 == 0:
        assert s == 0
    else:
        assert s > 0


@pytest.mark.parametrize("n", range(4, 11))
def test_hook_sign_imbalance_multinomial(n):
    for k in range(2, n - 1):
        hook = SkewShape(complement(hook_complement(k, n), k, n))
        assert sign_imbalance(hook) == multinomial((n - 2) // 2, (k - 1) // 2, (n - k - 1) // 2)


def test_gaussian_binomial_at_minus_one_matches_sympy():
    q = sympy.Symbol("q")
    for N in range(0, 9):
        for K in range(0, N + 1):
            num = prod((1 - q ** (N - i)) for i in range(K))
            den = prod((1 - q ** (i + 1)) for i in range(K))
            val = sympy.cancel(num / den).subs(q, -1)
            assert gaussian_binomial_at_minus_one(N, K) == int(val)


def test_multinomial_zero_unless_parts_sum():
    assert multinomial(5, 2, 3) == 10
    assert multinomial(5, 2, 2) == 0


# -- Littlewood-Richardson ------------------------------------------------------


@pytest.mark.parametrize(
    "nu_, lam, mu, value",
    [((2,), (1,), (1,), 1), ((1, 1), (1,), (1,), 1), ((3, 2, 1), (2, 1), (2, 1), 2), ((4, 2), (2, 1), (2, 1), 1), ((2, 2), (2,), (1, 1), 0)],
)
def test_lr_coefficients(nu_, lam, mu, value):
    assert lr_coefficient(nu_, lam, mu) == value


@pytest.mark.parametrize(
    "text, count",
    [
        ("GR(2,4): 1^4", 2),
        ("GR(2,5): 1^6", 5),
        ("GR(3,6): 1^9", 42),
        ("GR(3,6): 2.1^2, 1^3", 6),
        ("GR(2,8): 5, 1^7", 6),
        ("GR(4,8): 3.3.3, 1^7", 20),
        ("GR(4,8): 3.1^4", 9),
        ("GR(3,7): 2.1^4", 8),
        ("GR(2,8): 3^4", 4),
        ("GR(4,9): 4^2, 1.1.1^2, 1^6", 10),
        ("GR(4,8): 3.1.1, 2.1^3, 1^2", 54),
    ],
)
def test_known_complex_counts(text, count):
    assert complex_count(SchubertProblemSpec.parse(text)) == count


@pytest.mark.parametrize("k, n", [(2, 5), (3, 6), (3, 7), (2, 6), (4, 9)])
def test_points_only_count_is_rectangle_tableaux(k, n):
    problem = SchubertProblemSpec(k, n, ((Partition((1,)), k * (n - k)),))
    assert complex_count(problem) == hook_length_count((n - k,) * k)


def test_duality():
    p = SchubertProblemSpec.parse("GR(3,7): 2.1^4")
    assert complex_count(p.transpose()) == complex_count(p)


# -- nu ----------------------------------------------------------------------------


def test_nu_tables():
    assert [nu(5, 13, r) for r in range(1, 12, 2)] == [10, 18, 38, 78, 162, 330]
    assert [nu(4, 8, r) for r in range(0, 7, 2)] == [0, 4, 8, 20]
    assert [nu(2, 8, r) for r in range(0, 7, 2)] == [0, 2, 4, 6]


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=4, max_value=13), st.data())
def test_nu_properties(n, data):
    k = data.draw(st.integers(min_value=2, max_value=n - 2))
    rs = list(range((n - 2) % 2, n - 1, 2))
    vals = [nu(k, n, r) for r in rs]
    assert vals[-1] == comb(n - 2, k - 1)  # all roots real
    assert vals == sorted(vals)  # monotone within the parity class
    assert all(nu(k, n, r) == nu(n - k, n, r) for r in rs)  # x <-> y symmetry


def test_nu_by_direct_expansion():
    x, y = sympy.symbols("x y")
    for n in range(4, 10):
        for k in range(2, n - 1):
            for r in range((n - 2) % 2, n - 1, 2):
                c = (n - 2 - r) // 2
                expr = sympy.expand((x + y) ** r * (x**2 + y**2) ** c)
                assert nu(k, n, r) == sympy.Poly(expr, x, y).coeff_monomial(x ** (n - k - 1) * y ** (k - 1))


def test_rolle_window_and_predicted_support():
    assert admissible_derivative_root_counts(8, 7) == [6]
    assert admissible_derivative_root_counts(8, 1) == [0, 2, 4, 6]
    assert predicted_real_counts(4, 8, 7) == [20]
    assert predicted_real_counts(4, 8, 5) == [8, 20]
    assert predicted_real_counts(4, 8, 3) == [4, 8, 20]
    assert predicted_real_counts(4, 8, 1) == [0, 4, 8, 20]
    assert predicted_real_counts(2, 8, 1) == [0, 2, 4, 6]


def test_hook_problem_counts():
    for n in range(5, 11):
        for k in range(2, n - 1):
            assert complex_count(hook_problem(k, n)) == comb(n - 2, k - 1)
