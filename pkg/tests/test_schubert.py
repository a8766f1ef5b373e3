"""Osculating flags, charts, condition equations and Wronskians."""

from math import factorial

import pytest
import sympy
from gmpy2 import mpq

from oscschubert.combinat import SchubertProblemSpec
from oscschubert.exactalg import GaussianRational, PolyMatrix, UniPoly, rank
from oscschubert.groebner import PolySystem, groebner_basis, lex_basis
from oscschubert.schubert import (
    INF,
    Chart,
    Mobius,
    OsculatingInstance,
    OsculationPoint,
    OsculationType,
    condition_equations,
    flag_annihilator,
    flag_matrix,
    instance_system,
    osculation_type,
    wronskian,
)

P = OsculationPoint.of


def _mat_mul(A, B):
    n, m, p = A.shape[0], A.shape[1], B.shape[1]
    return [[sum((A[i, l] * B[l, j] for l in range(m)), mpq(0)) for j in range(p)] for i in range(n)]


def _is_zero(x):
    return x == 0 or (isinstance(x, GaussianRational) and x.re == 0 and x.im == 0)


# -- points and projective changes ----------------------------------------------


def test_point_parse_and_text():
    assert P("inf") is INF or P("inf") == INF
    assert P("1/2-3*i").conjugate() == P("1/2+3*i")
    assert P("2").is_real and not P("i").is_real
    assert P("-1/3+2*i").to_text() == "-1/3+2*i"


@pytest.mark.parametrize("p, q", [(P(2), P(0)), (P(2), P(-1)), (INF, P(3)), (P(-1), INF), (P(5), None)])
def test_mobius_sending(p, q):
    phi = Mobius.sending(p, q)
    assert phi(p) == INF
    if q is not None:
        assert phi(q) == P(0)


def test_mobius_commutes_with_conjugation():
    phi = Mobius.sending(P(2), P(-1))
    z = P("1+2*i")
    assert phi(z).conjugate() == phi(z.conjugate())
    with pytest.raises(ValueError):
        Mobius.sending(P("i"))
    with pytest.raises(ValueError):
        Mobius(1, 1, 1, 1)


# -- osculating flags -----------------------------------------------------------


def test_flag_rows_are_derivatives_of_the_curve():
    s = sympy.Symbol("s")
    n = 5
    gamma = [s**b / factorial(b) for b in range(n)]
    t0 = sympy.Rational(3, 2)
    F = flag_matrix(P(mpq(3, 2)), 3, n)
    for a in range(3):
        want = [sympy.diff(g, s, a).subs(s, t0) for g in gamma]
        got = [sympy.Rational(int(F[a, b].numerator), int(F[a, b].denominator)) for b in range(n)]
        assert got == want


@pytest.mark.parametrize("t", ["0", "2", "-1/3", "1+2*i", "inf"])
@pytest.mark.parametrize("i", [1, 2, 4])
def test_flag_times_annihilator_is_zero(t, i):
    n = 6
    F, A = flag_matrix(P(t), i, n), flag_annihilator(P(t), i, n)
    assert A.shape == (n, n - i)
    assert all(_is_zero(x) for row in _mat_mul(F, A) for x in row)
    if P(t).is_real:
        assert rank(F) == i and rank(A) == n - i


def test_flags_are_nested():
    n = 5
    big = flag_matrix(P(2), 4, n)
    small = flag_matrix(P(2), 2, n)
    assert rank(big.stack(small)) == 4


# -- charts -----------------------------------------------------------------------


def test_chart_at_infinity_matches_display():
    chart = Chart(3, 6, (2, 1))
    assert chart.pattern == (
        ("1", "m12", "0", "m14", "0", "m16"),
        ("0", "0", "1", "m24", "0", "m26"),
        ("0", "0", "0", "0", "1", "m36"),
    )


def test_double_chart_matches_display():
    chart = Chart(3, 6, (1, 1), (2, 1))
    assert chart.pattern == (
        ("1", "m12", "0", "0", "0", "0"),
        ("0", "0", "1", "m24", "0", "0"),
        ("0", "0", "0", "1", "m35", "m36"),
    )


@pytest.mark.parametrize("k, n, lam, mu", [(2, 4, (), None), (3, 6, (2, 1), None), (3, 6, (1, 1), (2, 1)), (4, 8, (3, 3, 3), None), (2, 8, (3,), (3,))])
def test_chart_dimension(k, n, lam, mu):
    chart = Chart(k, n, lam, mu)
    codim = sum(lam) + (sum(mu) if mu else 0)
    assert len(chart.variables) == k * (n - k) - codim


def test_empty_double_chart_rejected():
    with pytest.raises(ValueError):
        Chart(2, 4, (2, 2), (1,))


def test_chart_points_lie_in_anchored_varieties():
    # every point of the chart meets F_{n-k+i-lam_i}(inf) in dimension >= i
    k, n, lam = 3, 6, (2, 1)
    chart = Chart(k, n, lam)
    values = {v: mpq(j + 2, 3) for j, v in enumerate(chart.variables)}
    H = PolyMatrix([[x.evaluate(values) for x in row] for row in _chart_rows(chart)])
    padded = list(lam) + [0] * (k - len(lam))
    for i in range(1, k + 1):
        piece = flag_matrix(INF, n - k + i - padded[i - 1], n)
        # dim(H ∩ F) = rank H + rank F - rank [H; F]
        assert k + piece.shape[0] - rank(H.stack(piece)) >= i


def _chart_rows(chart):
    from oscschubert.schubert import chart_matrix

    M = chart_matrix(chart)
    return [[M[i, j] for j in range(chart.n)] for i in range(chart.k)]


# -- condition equations --------------------------------------------------------------


def test_osculating_plane_lies_in_its_own_condition():
    # F_2(t0) row-reduced into the full chart of Gr(2,4)
    t0 = mpq(3)
    chart = Chart(2, 4)
    coords = {"m13": -t0**2 / 2, "m14": -t0**3 / 3, "m23": t0, "m24": t0**2 / 2}
    for eq in condition_equations(chart, (2, 2), P(t0)):
        assert eq.evaluate(coords) == 0
    # tangent lines of the rational normal curve are disjoint
    assert any(eq.evaluate(coords) != 0 for eq in condition_equations(chart, (1,), P(1)))


def test_kernel_and_stacked_generate_the_same_ideal():
    inst = OsculatingInstance.build("GR(2,4): 1^4", [((1,), "inf"), ((1,), "0"), ((1,), "1"), ((1,), "-1")])
    a = instance_system(inst, method="kernel")
    b = instance_system(inst, method="stacked")
    assert a.variables == b.variables
    ga = lex_basis(PolySystem(a.variables, a.equations))
    gb = lex_basis(PolySystem(b.variables, b.equations))
    assert ga == gb


def test_kernel_and_stacked_agree_for_a_larger_condition():
    # one condition alone is positive-dimensional; compare reduced grevlex bases
    chart = Chart(2, 5, (1,))
    for t in ("2", "1+i"):
        ka = condition_equations(chart, (2, 1), P(t), method="kernel")
        st = condition_equations(chart, (2, 1), P(t), method="stacked")
        ga = groebner_basis(PolySystem(chart.variables, tuple(ka)), order="grevlex")
        gb = groebner_basis(PolySystem(chart.variables, tuple(st)), order="grevlex")
        assert ga == gb


def test_complex_condition_equations_are_rational():
    chart = Chart(2, 4, (1,))
    eqs = condition_equations(chart, (1,), P("1+i"))
    assert eqs and all(e.is_rational() for e in eqs)


def test_anchor_point_rejected():
    with pytest.raises(ValueError):
        condition_equations(Chart(2, 4, (1,)), (1,), INF)


# -- instances and osculation types -------------------------------------------------


def test_instance_validation():
    prob = "GR(2,4): 1^4"
    with pytest.raises(ValueError):
        OsculatingInstance.build(prob, [((1,), "0"), ((1,), "0"), ((1,), "1"), ((1,), "2")])
    with pytest.raises(ValueError):
        OsculatingInstance.build(prob, [((1,), "i"), ((1,), "0"), ((1,), "1"), ((1,), "2")])
    with pytest.raises(ValueError):
        OsculatingInstance.build(prob, [((1,), "0"), ((1,), "1"), ((1,), "2")])


def test_osculation_types():
    prob = SchubertProblemSpec.parse("GR(3,6): 2.1^2, 1^3")
    types = OsculationType.all_for(prob)
    assert [t.as_tuple() for t in types] == [(2, 3), (2, 1), (0, 3), (0, 1)]
    inst = OsculatingInstance.build(
        prob, [((2, 1), "i"), ((2, 1), "-i"), ((1,), "0"), ((1,), "1+i"), ((1,), "1-i")]
    )
    assert osculation_type(inst).as_tuple() == (0, 1)
    with pytest.raises(ValueError):
        OsculationType.of(prob, (1, 3))


def test_instance_system_moves_largest_real_condition_to_infinity():
    inst = OsculatingInstance.build(
        "GR(3,6): 2.1^2, 1^3", [((2, 1), "2"), ((2, 1), "5"), ((1,), "0"), ((1,), "1"), ((1,), "-1")]
    )
    system = instance_system(inst)
    assert system.chart.at_infinity == (2, 1)
    assert system.chart.at_zero == (2, 1)
    assert system.mobius(P(2)) == INF and system.mobius(P(5)) == P(0)


# -- Wronskians ----------------------------------------------------------------------


@pytest.mark.parametrize("k, n", [(2, 4), (2, 5), (3, 6)])
def test_wronskian_of_osculating_plane(k, n):
    t0 = mpq(2)
    w = wronskian(flag_matrix(P(t0), k, n))
    lead = w.coeffs[-1]
    assert w == UniPoly.from_roots([t0] * (k * (n - k))) * lead
    c = wronskian(flag_matrix(INF, k, n))
    assert c.degree == 0 and c.coeffs[0] != 0


def test_wronskian_matches_sympy():
    t = sympy.Symbol("t")
    rows = [[1, 2, 0, -1, 3], [0, 1, 1, 2, -2]]
    n = 5
    polys = [sum(c * (-1) ** b * t ** (n - 1 - b) / factorial(n - 1 - b) for b, c in enumerate(r)) for r in rows]
    ref = sympy.Poly(sympy.wronskian(polys, t), t, domain="QQ")
    w = wronskian(PolyMatrix([[mpq(c) for c in r] for r in rows]))
    got = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(w.coeffs)], t, domain="QQ")
    assert got == ref
    assert w.degree == 2 * (n - 2)


def test_wronskian_rank_check():
    with pytest.raises(ValueError):
        wronskian(PolyMatrix([[1, 2, 3], [2, 4, 6]]))
