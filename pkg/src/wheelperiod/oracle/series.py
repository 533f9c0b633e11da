"""Residue of the wheel from the closed series for the chain integral ``P_L``.

At coincident points (``r = 1``) the angular factor ``sin(n theta)/sin(theta)``
tends to ``n`` as ``theta -> 0``; that limit is taken analytically.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError


def broadhurst_coeff(n: int, L: int, r: float) -> float:
    """``C_{n,L}(r) = n^(-2L) sum_{k=0}^{L} binom(2L-k, L) (ln r^(-2n))^k / k!``."""
    if n < 1 or L < 1:
        raise DomainError("need n >= 1 and L >= 1")
    if not r > 0:
        raise DomainError("r must be positive")
    log_term = -2.0 * n * math.log(r)
    total = math.fsum(
        math.comb(2 * L - k, L) * log_term**k / math.factorial(k) for k in range(L + 1)
    )
    return total / n ** (2 * L)


def pl_series_residue(L: int, M: int) -> float:
    """``2 pi^(2(L+1)) sum_{n<=M} n C_{n,L}(1)``, an estimate of ``res G_{L+1}``."""
    if L < 2:
        raise DomainError("need L >= 2")
    if M < 1:
        raise DomainError("need at least one term")
    n = np.arange(M, 0, -1, dtype=float)
    # C_{n,L}(1) keeps only the k = 0 term
    terms = math.comb(2 * L, L) * n ** (1.0 - 2 * L)
    return 2.0 * math.pi ** (2 * (L + 1)) * math.fsum(terms)
