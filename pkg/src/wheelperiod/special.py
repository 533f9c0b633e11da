"""Gegenbauer polynomials, polylogarithms and zeta values.

Series are summed directly with explicit tail bounds; the arguments used by
the engine (zeta at integers >= 3) converge fast enough that no acceleration
is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, DomainError, PrecisionError, UsageError


@dataclass(frozen=True)
class PrecisionBudget:
    rel_tol: float = 1e-12
    max_terms: int = 10**7

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if self.max_terms < 10:
            raise DomainError("max_terms must be at least 10")


DEFAULT_BUDGET = PrecisionBudget()


def gegenbauer(m: int, lam: float, x):
    """Gegenbauer polynomial ``C_m^lam(x)`` by the three-term recurrence.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    if m < 0:
        raise DomainError("degree m must be non-negative")
    if lam <= 0:
        raise DomainError("lambda must be positive")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if m == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * lam * x
    for k in range(2, m + 1):
        prev, cur = cur, (2.0 * x * (k + lam - 1) * cur - (k + 2 * lam - 2) * prev) / k
    return cur if cur.ndim else float(cur)


def _terms_needed(k: int, xi: float, rel_tol: float, lower: float) -> int:
    """Smallest M whose tail bound is below ``rel_tol * lower``."""
    target = rel_tol * lower
    if xi == 1.0:
        # sum_{n > M} n^-k <= M^(1-k) / (k-1)
        return math.ceil((target * (k - 1)) ** (-1.0 / (k - 1)))
    # sum_{n > M} xi^n / n^k <= xi^(M+1) / ((1-xi) (M+1)^k)
    M = 1
    while xi ** (M + 1) / ((1.0 - xi) * (M + 1) ** k) > target:
        M *= 2
    lo, hi = M // 2, M
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if xi ** (mid + 1) / ((1.0 - xi) * (mid + 1) ** k) > target:
            lo = mid
        else:
            hi = mid
    return hi


def polylog(k: int, xi: float, budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """``Li_k(xi) = sum_{n>=1} xi^n / n^k`` for ``0 <= xi <= 1``.

    The truncation point is chosen from a rigorous tail bound so that the
    neglected tail is at most ``budget.rel_tol`` times the result.  At
    ``xi = 1`` the tail is then estimated by the midpoint integral
    ``(M + 1/2)^(1-k) / (k-1)`` and added, leaving an error of order
    ``M^(-k-1)``.

    Raises
    ------
    DivergenceError
        For ``k = 1, xi = 1`` (harmonic series) or ``k < 1`` at ``xi = 1``.
    PrecisionError
        If more than ``budget.max_terms`` terms would be needed.
    """
    if k < 1:
        raise DomainError("polylog order k must be >= 1")
    if not 0.0 <= xi <= 1.0:
        raise DomainError("polylog argument must lie in [0, 1]")
    if xi == 1.0 and k == 1:
        raise DivergenceError("Li_1(1) diverges")
    if xi == 0.0:
        return 0.0
    # the first term is a lower bound for the (positive) sum
    M = _terms_needed(k, xi, budget.rel_tol, xi)
    if M > budget.max_terms:
        raise PrecisionError(
            f"Li_{k}({xi}) needs {M} terms, budget allows {budget.max_terms}"
        )
    n = np.arange(1, M + 1, dtype=float)
    if xi == 1.0:
        tail = (M + 0.5) ** (1.0 - k) / (k - 1)
        return math.fsum(np.append(n[::-1] ** (-k), tail))
    terms = np.exp(n * math.log(xi) - k * np.log(n))
    return math.fsum(terms[::-1])


def zeta_odd(k: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """Riemann zeta at an integer ``k >= 2`` via :func:`polylog` at 1."""
    if k <= 1:
        raise DivergenceError(f"zeta({k}) is divergent or outside the series range")
    return polylog(k, 1.0, budget)


def binomial(a: int, b: int) -> int:
    if not 0 <= b <= a:
        raise UsageError(f"binomial({a}, {b}) requires 0 <= b <= a")
    return math.comb(a, b)
