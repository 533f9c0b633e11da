from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from wheelperiod.conformal import EIRTriple, casimirs, dual, sextuplet, twist
from wheelperiod.errors import DomainError

h = Fraction(1, 2)


def labels():
    return st.integers(0, 12).flatmap(
        lambda ell: st.tuples(st.integers(1, 12), st.just(ell), st.integers(1, 2 * ell + 1))
    )


@pytest.mark.parametrize(
    "triple,value,gci",
    [((1, h, 0), h, False), ((3, 1, 1), 1, True), ((2, h, h), 1, True), ((3, h, h), 2, True)],
)
def test_twist(triple, value, gci):
    chi = EIRTriple(*triple)
    assert twist(chi) == value
    assert chi.is_gci is gci


def test_triple_validation():
    with pytest.raises(DomainError):
        EIRTriple(1, Fraction(1, 3), 0)
    with pytest.raises(DomainError):
        EIRTriple(1, -1, 0)


def test_dual_examples():
    assert dual(EIRTriple(1, 0, 0)) == EIRTriple(3, 0, 0)
    nu, ell, n = 2, 3, 4
    chi = EIRTriple(1 - ell - nu, ell - Fraction(n - 1, 2), Fraction(n - 1, 2))
    assert dual(chi) == EIRTriple(3 + ell + nu, Fraction(n - 1, 2), ell - Fraction(n - 1, 2))


@given(st.fractions(), st.integers(0, 20), st.integers(0, 20))
def test_dual_involution_and_twist_sum(d, a, b):
    chi = EIRTriple(d, Fraction(a, 2), Fraction(b, 2))
    assert dual(dual(chi)) == chi
    assert twist(chi) + twist(dual(chi)) == 4 - 2 * (chi.j1 + chi.j2)


def test_gauge_sextuplet():
    sx = sextuplet(1, 0, 1)
    assert sx.chi_0 == EIRTriple(1, h, h)
    assert sx.chi_minus_nu == EIRTriple(0, 0, 0)
    assert sx.chi_n == EIRTriple(2, 1, 0)
    assert sx.intertwiner_orders == (1, 1, 1)


def test_gravity_sextuplet():
    sx = sextuplet(1, 1, 2)
    assert sx.chi_0 == EIRTriple(0, 1, 1)
    assert sx.chi_n == EIRTriple(2, 2, 0)
    assert sx.intertwiner_orders == (1, 2, 2)


@given(labels())
def test_sextuplet_structure(lab):
    nu, ell, n = lab
    sx = sextuplet(nu, ell, n)
    assert len(sx.members) == 6
    assert sx.bottom_row == tuple(dual(c) for c in sx.top_row)
    assert sx.labels == (-nu, 0, n)
    assert sx.chi_minus_nu.d + nu == sx.chi_0.d
    assert sx.chi_n.d - n == sx.chi_0.d


@given(labels())
def test_relatives_share_cubic_casimir(lab):
    c3 = casimirs(*lab)[1]
    assert {chi.cubic_casimir() for chi in sextuplet(*lab).members} == {c3}


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, -1, 1), (1, 1, 0), (1, 1, 4)])
def test_label_constraints(bad):
    with pytest.raises(DomainError):
        sextuplet(*bad)
    with pytest.raises(DomainError):
        casimirs(*bad)


def test_casimirs_against_sympy():
    l, v, n = sp.symbols("l v n")
    c2 = (l + 1 - n) ** 2 + l * (l + 2) + (l + v + 3) * (l + v - 1)
    c3 = -(l + 1) * (l + 1 - n) * (l + 1 + v)
    c4 = (
        n**2 * (2 * l + 2 - n) ** 2 + 1
        - 2 * ((l + 1) ** 2 + (l + 1 - n) ** 2) * ((l + v + 1) ** 2 + 1)
        + (l + v + 1) ** 2 * ((l + v + 1) ** 2 - 2)
    )
    for lab in [(2, 1, 1), (3, 2, 5), (1, 4, 2)]:
        sub = dict(zip((v, l, n), lab))
        expected = tuple(Fraction(int(c.subs(sub))) for c in (c2, c3, c4))
        assert casimirs(*lab) == expected
    assert casimirs(2, 1, 1) == (16, -8, 64)


def test_symmetric_tensor_series():
    for ell in range(51):
        assert casimirs(1, ell, ell + 1) == (2 * ell * (ell + 3), 0, 0)
    assert casimirs(1, 0, 1) == (0, 0, 0)
    assert casimirs(1, 2, 3) == (20, 0, 0)
    assert casimirs(1, 1, 2) == (8, 0, 0)


def test_casimirs_are_exact():
    assert all(isinstance(c, Fraction) for c in casimirs(3, 2, 2))
