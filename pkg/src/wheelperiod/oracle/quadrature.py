"""Sector integrals by nested adaptive quadrature.

After the angular integrations the integrand of a sector is

    2^(L+1) * sum_m m^(1-L) * X^m = 2^(L+1) * Li_{L-1}(X),
    X = prod_{rim edges} min(r_i, r_j) / max(r_i, r_j),

against the measure ``prod dr_k / r_k``.  The sector ``1 >= r_sigma1 >= ...``
is parametrised by ratios ``y_j = r_sigma(j) / r_sigma(j-1)`` in ``(0, 1]``
(with ``r_sigma(0) = r_0 = 1``), which turns it into the unit cube with
measure ``prod dy_j / y_j``.  Each level is integrated by adaptive
Gauss-Kronrod (7/15) bisection, nested ``L`` deep.

Nothing here uses the exponent slopes of the exact engine; ``X`` is formed
directly from the radii.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from numba import njit
from scipy.special import bernoulli, zeta as _zeta

from ..combinatorics import as_permutation
from ..errors import DomainError, PrecisionError

MAX_QUAD_L = 5

_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])


def _log_series_coefficients(k: int, terms: int = 60) -> np.ndarray:
    """Coefficients ``zeta(k-j)/j!`` of the expansion of ``Li_k(e^mu)`` in ``mu``."""
    coef = np.zeros(terms)
    for j in range(terms):
        if j == k - 1:
            continue
        s = k - j
        if s >= 2:
            z = float(_zeta(s))
        elif s == 0:
            z = -0.5
        else:
            # zeta(s) = -B_{1-s} / (1-s) for s <= -1
            z = -float(bernoulli(1 - s)[1 - s]) / (1 - s)
        coef[j] = z / math.factorial(j)
    return coef


@njit(cache=True)
def _li(k, x, coef):
    # Li_k(x) for 0 <= x < 1: power series below 1/2, log series above
    if x <= 0.0:
        return 0.0
    if k == 1:
        return -math.log1p(-x)
    if x <= 0.5:
        s = 0.0
        p = x
        n = 1
        while True:
            t = p / n ** k
            s += t
            if t <= 1e-17 * s:
                return s
            n += 1
            p *= x
    mu = math.log(x)
    harmonic = 0.0
    fact = 1.0
    for i in range(1, k):
        harmonic += 1.0 / i
        fact *= i
    s = mu ** (k - 1) / fact * (harmonic - math.log(-mu))
    p = 1.0
    for j in range(coef.shape[0]):
        if j != k - 1:
            s += coef[j] * p
        p *= mu
    return s


@njit(cache=True)
def _sector_integrand(y, sigma, L, M, coef):
    r = np.empty(L + 1)
    r[0] = 1.0
    cur = 1.0
    jac = 1.0
    for j in range(L):
        cur *= y[j]
        jac *= y[j]
        r[sigma[j]] = cur
    if jac == 0.0:
        return 0.0
    X = 1.0
    for i in range(L + 1):
        a = r[i]
        b = r[(i + 1) % (L + 1)]
        X *= min(a, b) / max(a, b)
    if M > 0:
        s = 0.0
        p = 1.0
        for m in range(1, M + 1):
            p *= X
            s += p * m ** (1.0 - L)
    else:
        s = _li(L - 1, X, coef)
    return 2.0 ** (L + 1) * s / jac


@njit(cache=True)
def _nest(level, y, sigma, L, M, coef, tol, status):
    if level == L:
        return _sector_integrand(y, sigma, L, M, coef)
    lim = 400
    A = np.empty(lim)
    B = np.empty(lim)
    R = np.empty(lim)
    E = np.empty(lim)
    A[0] = 0.0
    B[0] = 1.0
    n = 1
    k = 0
    total = 0.0
    err = 0.0
    inner_tol = tol * 0.1
    first = True
    while True:
        a0 = A[k]
        b0 = B[k]
        mid = 0.5 * (a0 + b0)
        segments = 1 if first else 2
        for seg in range(segments):
            if first:
                a = a0
                b = b0
            elif seg == 0:
                a = a0
                b = mid
            else:
                a = mid
                b = b0
            c = 0.5 * (a + b)
            h = 0.5 * (b - a)
            rk = 0.0
            rg = 0.0
            for i in range(8):
                if i == 7:
                    y[level] = c
                    fc = _nest(level + 1, y, sigma, L, M, coef, inner_tol, status)
                    rk += _WGK[7] * fc
                    rg += _WG[3] * fc
                else:
                    y[level] = c - h * _XGK[i]
                    f1 = _nest(level + 1, y, sigma, L, M, coef, inner_tol, status)
                    y[level] = c + h * _XGK[i]
                    f2 = _nest(level + 1, y, sigma, L, M, coef, inner_tol, status)
                    rk += _WGK[i] * (f1 + f2)
                    if i % 2 == 1:
                        rg += _WG[i // 2] * (f1 + f2)
            res = rk * h
            e = abs((rk - rg) * h)
            if first:
                R[0] = res
                E[0] = e
                total = res
                err = e
            elif seg == 0:
                total += res - R[k]
                err += e - E[k]
                B[k] = b
                R[k] = res
                E[k] = e
            else:
                A[n] = a
                B[n] = b
                R[n] = res
                E[n] = e
                n += 1
                total += res
                err += e
        first = False
        if err <= tol * abs(total) or err < 1e-300:
            break
        if n >= lim - 1:
            status[0] = 1
            break
        k = 0
        for i in range(1, n):
            if E[i] > E[k]:
                k = i
    return total


def _check_radii(radii: np.ndarray) -> None:
    if np.any(radii <= 0) or np.any(radii > 1):
        raise DomainError("radii must lie in (0, 1]")


def radial_kernel(radii: Sequence[float], L: int, M: int) -> float:
    """Truncated sector integrand as a density in ``dr_1 ... dr_L``.

    ``2^(L+1) sum_{m=1}^{M} m^(1-L) prod_edges (r_ij/R_ij)^(m-1) / R_ij^2``
    times the spoke and measure factor ``prod r_k`` (hub propagator
    ``1/r_k^2`` against ``r_k^3 dr_k``).  The rim cycle includes the
    reference vertex with ``r_0 = 1``.
    """
    r = np.asarray(radii, dtype=float)
    if r.shape != (L,):
        raise DomainError(f"expected {L} radii, got shape {r.shape}")
    _check_radii(r)
    if M < 1:
        raise DomainError("truncation M must be >= 1")
    full = np.concatenate(([1.0], r))
    nxt = np.roll(full, -1)
    lo = np.minimum(full, nxt)
    hi = np.maximum(full, nxt)
    ratio = float(np.prod(lo / hi))
    m = np.arange(1, M + 1, dtype=float)
    series = math.fsum(m ** (1.0 - L) * ratio ** (m - 1))
    return 2.0 ** (L + 1) * series / float(np.prod(hi**2)) * float(np.prod(r))


def truncation_tail_bound(L: int, M: int) -> float:
    """Upper bound on the sector-integral tail dropped by truncating at ``M``.

    Every radial cut is crossed by at least two rim edges, so ``X^m`` is at
    most ``prod y_j^(2m)`` and each term integrates to at most
    ``2^(L+1) m^(1-L) (2m)^-L``.  Summing ``m > M`` gives
    ``M^(2-2L) / (L-1)``.
    """
    if L < 2 or M < 1:
        raise DomainError("need L >= 2 and M >= 1")
    return M ** (2.0 - 2.0 * L) / (L - 1)


def quad_sector_integral(
    sigma: Sequence[int],
    M: int | None = None,
    tol: float = 1e-9,
    check_tail: bool = True,
) -> float:
    """Nested adaptive quadrature of the sector integral ``I_sigma``.

    With ``M=None`` the ``m``-sum is carried out in closed form (no
    truncation).  With a finite ``M`` the truncated kernel is integrated; if
    ``check_tail`` is set, ``M`` must make :func:`truncation_tail_bound`
    smaller than half the requested relative tolerance.
    """
    sigma = as_permutation(sigma)
    L = len(sigma)
    if L > MAX_QUAD_L:
        raise DomainError(f"quadrature is limited to L <= {MAX_QUAD_L}")
    if not tol > 0:
        raise DomainError("tol must be positive")
    coef = _log_series_coefficients(L - 1)
    status = np.zeros(1, dtype=np.int64)
    y = np.empty(L)
    value = _nest(0, y, np.array(sigma, dtype=np.int64), L, 0 if M is None else int(M),
                  coef, float(tol), status)
    if status[0]:
        raise PrecisionError(f"quadrature for {sigma} did not reach tol={tol}")
    if M is not None and check_tail:
        bound = truncation_tail_bound(L, M)
        if bound > 0.5 * tol * abs(value):
            raise PrecisionError(
                f"truncation M={M} leaves a tail up to {bound:.3g}; raise M or pass M=None"
            )
    return value
