import itertools
import math
from fractions import Fraction

import pytest
import sympy as sp

from conftest import brute_force_pattern
from wheelperiod.combinatorics import (
    catalan,
    enumerate_permutations,
    min_class_representative,
    reflect,
    s1_generate,
)
from wheelperiod.errors import DivergenceError, DomainError, UsageError
from wheelperiod.residue import (
    class_table,
    closed_form_N,
    exponent_slopes,
    min_fraction,
    n_sigma,
    wheel_residue,
)


def sympy_sector_moment(sigma, m):
    """Iterated integral of prod_edges (r_min/r_max)^m against prod dr/r over the sector.

    Built straight from the rim cycle with sympy, independent of the slope ledger.
    """
    L = len(sigma)
    r = sp.symbols(f"r0:{L + 1}", positive=True)
    rank = {0: 0, **{v: i + 1 for i, v in enumerate(sigma)}}
    integrand = sp.Integer(1)
    for i in range(L + 1):
        j = (i + 1) % (L + 1)
        lo, hi = (i, j) if rank[i] > rank[j] else (j, i)
        integrand *= (r[lo] / r[hi]) ** m
    integrand = integrand.subs(r[0], 1)
    for k in range(1, L + 1):
        integrand /= r[k]
    order = list(sigma)
    for pos in range(L - 1, -1, -1):
        upper = r[order[pos - 1]] if pos > 0 else 1
        integrand = sp.integrate(sp.expand(integrand), (r[order[pos]], 0, upper))
    return sp.nsimplify(integrand)


def test_slopes_examples():
    assert exponent_slopes((1, 2, 3)) == (0, 0, 2)
    assert exponent_slopes((2, 3, 1)) == (2, -2, 2)
    assert exponent_slopes((2, 3, 1, 4)) == (2, -2, 0, 2)


def test_n_sigma_identity_and_published_sectors():
    for L in range(2, 11):
        assert n_sigma(range(1, L + 1)).n_sigma == 1
    ev = n_sigma((2, 3, 1, 4))
    assert ev.n_sigma == 4 and ev.divisors == (2, 4, 4, 2)
    assert n_sigma((4, 2, 1, 3, 5)).n_sigma == 12
    assert n_sigma((4, 1, 2, 3, 5)).n_sigma == 8


def test_printed_label_14235_is_in_the_quarter_class():
    # the 1/8 value is quoted for (14235); both exact and quadrature routes put it at 1/4
    from wheelperiod.oracle import quad_sector_integral
    from wheelperiod.special import zeta_odd

    assert n_sigma((1, 4, 2, 3, 5)).n_sigma == 4
    value = quad_sector_integral((1, 4, 2, 3, 5), tol=1e-8)
    assert value == pytest.approx(0.5 * zeta_odd(9), rel=1e-7)
    value = quad_sector_integral((4, 1, 2, 3, 5), tol=1e-8)
    assert value == pytest.approx(0.25 * zeta_odd(9), rel=1e-7)


@pytest.mark.parametrize(
    "sigma",
    list(itertools.permutations(range(1, 5))) + [(1, 4, 2, 3, 5), (4, 1, 2, 3, 5), (4, 2, 1, 3, 5), (2, 4, 1, 3, 5)],
)
def test_divisors_against_symbolic_integration(sigma):
    L = len(sigma)
    n = n_sigma(sigma).n_sigma
    for m in (1, 2):
        expected = sp.Rational(1, (2 * m) ** L * n)
        assert sympy_sector_moment(sigma, m) == expected


@pytest.mark.parametrize("L", range(2, 9))
def test_ledger_invariants(L):
    for sigma in enumerate_permutations(L):
        ev = n_sigma(sigma)
        a = ev.slopes
        assert set(a) <= {-2, 0, 2}
        assert sum(a) == 2
        assert a.count(2) == a.count(-2) + 1
        assert a[sigma[-1] - 1] == 2
        assert ev.divisors[-1] == 2
        assert all(c > 0 and c % 2 == 0 for c in ev.divisors)
        assert ev.n_sigma == math.prod(c // 2 for c in ev.divisors)


def test_class_table_examples(tables):
    t2 = tables[2]
    assert [(r.n_s, r.size, r.quotient, r.avoiders) for r in t2.rows] == [(1, 2, 2, 2)]
    assert t2.catalan == 2
    t3 = tables[3]
    assert [(r.n_s, r.size, r.quotient, r.avoiders) for r in t3.rows] == [(1, 4, 4, 4), (2, 2, 1, 1)]
    t5 = tables[5]
    assert [(r.n_s, r.quotient) for r in t5.rows] == [(1, 16), (2, 12), (4, 9), (8, 4), (12, 1)]
    assert t5.quotient_sum == 42


@pytest.mark.parametrize("L", range(2, 9))
def test_census_invariants(L, tables):
    t = tables[L]
    assert sum(r.size for r in t.rows) == math.factorial(L)
    assert all(r.size % r.n_s == 0 for r in t.rows)
    assert t.quotient_sum == catalan(L)
    assert t.inverse_sum == Fraction(catalan(L))
    assert t.sum_check
    assert [r.n_s for r in t.rows] == sorted(r.n_s for r in t.rows)
    assert all(r.avoiders == r.quotient for r in t.rows)
    for r in t.rows:
        if r.closed_form is not None:
            assert r.closed_form == r.quotient


@pytest.mark.parametrize("L", range(2, 7))
def test_census_against_direct_enumeration(L, tables):
    sizes, avoiders = {}, {}
    for sigma in itertools.permutations(range(1, L + 1)):
        n = n_sigma(sigma).n_sigma
        sizes[n] = sizes.get(n, 0) + 1
        avoiders[n] = avoiders.get(n, 0) + (not brute_force_pattern(sigma))
    assert {r.n_s: r.size for r in tables[L].rows} == sizes
    assert {r.n_s: r.avoiders for r in tables[L].rows} == avoiders


def test_class_table_worker_independence(tables):
    assert class_table(8, workers=3) == tables[8]


def test_class_table_bounds():
    with pytest.raises(UsageError):
        class_table(1)
    with pytest.raises(UsageError):
        class_table(11)


@pytest.mark.parametrize("L", range(2, 9))
def test_reflection_and_s1(L, tables):
    for sigma in enumerate_permutations(L):
        assert n_sigma(reflect(sigma)).n_sigma == n_sigma(sigma).n_sigma
    family = s1_generate(L)
    assert all(n_sigma(s).n_sigma == 1 for s in family)
    assert tables[L].row(1).size == len(family) == 2 ** (L - 1)


@pytest.mark.parametrize("L", range(5, 9))
def test_known_multiplicities(L, tables):
    # |s| = n_s * N_L(n_s) with the published quotients written out directly
    expected_N = {
        1: 2 ** (L - 1),
        2: (L - 2) * 2 ** (L - 3),
        4: (L - 3) * (L + 4) * 2 ** (L - 6),
        8: Fraction(2 ** L * (L - 4) * (L * (L + 13) + 6), 6 * 2 ** 7),
        12: (L - 4) * Fraction(2 ** L, 2 ** 5),
    }
    for n_s, N in expected_N.items():
        assert tables[L].row(n_s).size == n_s * N


def test_closed_form_examples():
    assert closed_form_N(5, 8) == 4
    assert closed_form_N(4, 4) == 2
    assert closed_form_N(6, 16) is None
    assert closed_form_N(3, 36) == 0


def test_published_forms_leave_eight_of_132_at_L6(tables):
    listed = sum(r.quotient for r in tables[6].rows if r.closed_form is not None)
    assert listed == 124


def test_min_fraction_examples():
    assert min_fraction(4) == (4, 8)
    assert min_fraction(5) == (12, 12)
    assert min_fraction(6) == (36, 72)
    with pytest.raises(DomainError):
        min_fraction(3)


@pytest.mark.parametrize("L", range(4, 9))
def test_min_class_representative_lands_in_largest_class(L, tables):
    top = tables[L].rows[-1]
    assert (top.n_s, top.size) == min_fraction(L)
    assert n_sigma(min_class_representative(L)).n_sigma == top.n_s


@pytest.mark.parametrize("n,coeff", [(3, 12), (4, 40), (5, 140)])
def test_wheel_residue(n, coeff):
    res = wheel_residue(n)
    assert res.coefficient == coeff
    assert res.sector_sum_coefficient == coeff
    assert (res.pi_power, res.zeta_argument) == (2 * n, 2 * n - 3)
    assert res.symbolic == f"{coeff} * pi^{2 * n} * zeta({2 * n - 3})"


def test_wheel_residue_numeric():
    # 12 pi^6 zeta(3) from mpmath at 30 digits
    assert wheel_residue(3).numeric == pytest.approx(13867.734201122762, rel=1e-12)


def test_wheel_residue_divergent():
    with pytest.raises(DivergenceError):
        wheel_residue(2)
