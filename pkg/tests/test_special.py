import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate
from scipy.special import gamma

from wheelperiod.errors import DivergenceError, DomainError, PrecisionError, UsageError
from wheelperiod.special import PrecisionBudget, binomial, gegenbauer, polylog, zeta_odd

# 20-digit values computed with mpmath.zeta at 30 digits
ZETA3 = 1.2020569031595942854
ZETA5 = 1.0369277551433699263
ZETA7 = 1.0083492773819228268


def test_gegenbauer_examples():
    assert gegenbauer(0, 1.0, 0.3) == 1.0
    assert gegenbauer(2, 1.0, 1.0) == pytest.approx(3.0, abs=1e-15)
    assert gegenbauer(3, 1.0, math.cos(0.7)) == pytest.approx(math.sin(2.8) / math.sin(0.7), rel=1e-13)


def test_gegenbauer_general_lambda_against_explicit_polynomial():
    # C_2^lam(x) = 2 lam (lam + 1) x^2 - lam
    for lam in (0.5, 1.5, 3.0):
        for x in (-0.9, 0.1, 0.75):
            assert gegenbauer(2, lam, x) == pytest.approx(2 * lam * (lam + 1) * x * x - lam)


def test_chebyshev_identity():
    theta = np.linspace(0.0, math.pi, 102)[1:-1]
    for m in range(51):
        lhs = gegenbauer(m, 1.0, np.cos(theta))
        rhs = np.sin((m + 1) * theta) / np.sin(theta)
        assert np.max(np.abs(lhs - rhs)) <= 1e-10


def test_sphere_volume_and_orthogonality():
    # |S^3| = 2 pi^(lam+1) / Gamma(lam+1) at lam = 1
    assert 2 * math.pi**2 / gamma(2.0) == pytest.approx(2 * math.pi**2, rel=1e-15)
    for p in range(13):
        for q in range(13):
            val, _ = integrate.quad(
                lambda t: gegenbauer(p, 1.0, math.cos(t)) * gegenbauer(q, 1.0, math.cos(t)) * math.sin(t) ** 2,
                0.0, math.pi, epsabs=1e-13, limit=200,
            )
            expected = math.pi / 2 if p == q else 0.0
            assert abs(val - expected) <= 1e-8


def test_polylog_examples():
    assert polylog(1, 0.5) == pytest.approx(math.log(2), rel=1e-12)
    assert polylog(2, 0.0) == 0.0
    assert polylog(3, 1.0) == pytest.approx(ZETA3, rel=1e-12)
    # Li_2(1/2) = pi^2/12 - ln(2)^2/2
    assert polylog(2, 0.5) == pytest.approx(math.pi**2 / 12 - math.log(2) ** 2 / 2, rel=1e-12)


def test_polylog_errors():
    with pytest.raises(DivergenceError):
        polylog(1, 1.0)
    with pytest.raises(DomainError):
        polylog(2, 1.5)
    with pytest.raises(PrecisionError):
        polylog(2, 1.0, PrecisionBudget(rel_tol=1e-12, max_terms=1000))


def test_precision_budget_validation():
    with pytest.raises(DomainError):
        PrecisionBudget(rel_tol=0.0)
    with pytest.raises(DomainError):
        PrecisionBudget(max_terms=5)


def test_zeta_reference_values():
    for k, ref, printed in ((3, ZETA3, "1.2020569032"), (5, ZETA5, "1.0369277551"), (7, ZETA7, "1.0083492774")):
        val = zeta_odd(k)
        assert abs(val - ref) / ref <= 1e-12
        assert f"{val:.10f}" == printed
    with pytest.raises(DivergenceError):
        zeta_odd(1)


@given(st.integers(1, 6), st.floats(0.0, 0.95), st.floats(0.0, 0.95))
def test_polylog_monotone_in_argument(k, a, b):
    lo, hi = sorted((a, b))
    assert polylog(k, lo) <= polylog(k, hi) * (1 + 1e-12)


@given(st.integers(1, 8), st.floats(0.01, 0.95))
def test_polylog_decreasing_in_order(k, xi):
    assert polylog(k + 1, xi) <= polylog(k, xi)


def test_zeta_decreases_to_one():
    values = [zeta_odd(k) for k in range(3, 30)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] - 1 < 1e-8


def _pascal(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(0, 0) == 1
    assert binomial(20, 10) == _pascal(20)[10] == 184756
    with pytest.raises(UsageError):
        binomial(3, 4)
