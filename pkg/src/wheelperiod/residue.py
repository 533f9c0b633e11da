"""Exact sector values, the class census and wheel-graph residues.

After the Gegenbauer expansion of the rim propagators and the angular
integrations, the sector integral for ``sigma`` becomes a nested radial
integral of monomials.  Each rim vertex ``k`` carries the exponent
``a_k * m - 1`` where ``a_k = (#incident edges on which r_k is the smaller
radius) - (#edges on which it is the larger)``.  Integrating from the
smallest radius outward, step ``t`` divides by ``c_t * m`` with ``c_t`` the
running sum of slopes, and the surviving ``m``-sum is ``zeta(2L-1)``::

    I_sigma = 2 * zeta(2L - 1) / n_sigma,   n_sigma = prod_t (c_t / 2)

Everything in this module is exact integer/rational arithmetic; floats only
appear in the ``numeric`` convenience fields.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import combinatorics as comb
from .combinatorics import Permutation
from .errors import DivergenceError, DomainError, InvariantError, UsageError
from .special import binomial, zeta_odd

DEFAULT_SWEEP_MAX = 10
WORKERS_ENV = "WHEELPERIOD_WORKERS"


@dataclass(frozen=True)
class SectorEvaluation:
    sigma: Permutation
    slopes: tuple[int, ...]
    divisors: tuple[int, ...]
    n_sigma: int

    @property
    def value_over_zeta(self) -> Fraction:
        """``I_sigma / zeta(2L-1)``."""
        return Fraction(2, self.n_sigma)


@dataclass(frozen=True)
class ClassRow:
    n_s: int
    size: int
    quotient: int
    avoiders: int
    closed_form: int | None = None

    @property
    def closed_form_status(self) -> str:
        if self.closed_form is None:
            return "computed, no published formula"
        return "match" if self.closed_form == self.quotient else "MISMATCH"


@dataclass(frozen=True)
class ClassTable:
    L: int
    rows: tuple[ClassRow, ...]
    catalan: int
    inverse_sum: Fraction

    @property
    def sum_check(self) -> bool:
        return self.inverse_sum == self.catalan

    @property
    def quotient_sum(self) -> int:
        return sum(r.quotient for r in self.rows)

    def row(self, n_s: int) -> ClassRow | None:
        for r in self.rows:
            if r.n_s == n_s:
                return r
        return None


@dataclass(frozen=True)
class WheelResidue:
    spokes: int
    coefficient: Fraction
    pi_power: int
    zeta_argument: int
    numeric: float
    sector_sum_coefficient: Fraction | None = field(default=None)

    @property
    def symbolic(self) -> str:
        c = self.coefficient
        coeff = str(c.numerator) if c.denominator == 1 else f"({c})"
        return f"{coeff} * pi^{self.pi_power} * zeta({self.zeta_argument})"


def exponent_slopes(sigma: Sequence[int]) -> tuple[int, ...]:
    """Slopes ``(a_1, ..., a_L)`` of the rim vertices for the sector ``sigma``.

    The rim is the cycle ``0-1-...-L-0``; vertex 0 has radius 1 and ranks
    above every other vertex.
    """
    L = len(sigma)
    rank = [0] * (L + 1)
    for pos, v in enumerate(sigma, start=1):
        rank[v] = pos
    slopes = [0] * (L + 1)
    for i in range(L + 1):
        j = i + 1 if i < L else 0
        # the larger rank is the smaller radius
        if rank[i] > rank[j]:
            slopes[i] += 1
            slopes[j] -= 1
        else:
            slopes[j] += 1
            slopes[i] -= 1
    return tuple(slopes[1:])


def n_sigma(sigma: Sequence[int]) -> SectorEvaluation:
    """Exact divisor ``n_sigma`` with ``I_sigma = 2 zeta(2L-1) / n_sigma``."""
    sigma = comb.as_permutation(sigma)
    slopes = exponent_slopes(sigma)
    divisors = []
    c = 0
    n = 1
    for v in reversed(sigma):
        c += slopes[v - 1]
        if c <= 0 or c % 2:
            raise InvariantError(f"divisor {c} for sector {sigma} is not positive even")
        divisors.append(c)
        n *= c // 2
    if c != 2:
        raise InvariantError(f"slopes of {sigma} sum to {c}, expected 2")
    return SectorEvaluation(sigma, slopes, tuple(divisors), n)


def _fast_n(sigma: Sequence[int], L: int) -> int:
    # hot loop of the sweep; same ledger as n_sigma without the audit trail
    rank = [0] * (L + 2)
    for pos, v in enumerate(sigma, start=1):
        rank[v] = pos
    rank[L + 1] = 0
    c = 0
    n = 1
    for pos in range(L - 1, -1, -1):
        v = sigma[pos]
        r = rank[v]
        c += (1 if r > rank[v - 1] else -1) + (1 if r > rank[v + 1] else -1)
        n *= c >> 1
    return n


def _block_census(L: int, prefixes: Sequence[Permutation]) -> tuple[Counter, Counter]:
    sizes: Counter = Counter()
    avoiders: Counter = Counter()
    for prefix in prefixes:
        for sigma in comb.enumerate_block(L, prefix):
            n = _fast_n(sigma, L)
            sizes[n] += 1
            if not comb.contains_forbidden_pattern(sigma):
                avoiders[n] += 1
    return sizes, avoiders


def resolve_workers(workers: int | None = None) -> int:
    """Worker count from the argument, then the environment, then the CPU count."""
    if workers is None:
        env = os.environ.get(WORKERS_ENV)
        try:
            workers = int(env) if env else (os.cpu_count() or 1)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV}={env!r} is not an integer") from None
    if workers < 1:
        raise UsageError("worker count must be >= 1")
    return workers


def class_table(L: int, workers: int | None = None, sweep_max: int = DEFAULT_SWEEP_MAX) -> ClassTable:
    """Sweep all of ``S_L`` and group sectors by ``n_sigma``.

    The sweep is split into contiguous lexicographic blocks; block censuses
    are merged by integer addition, so the result does not depend on the
    number of workers.
    """
    if not 2 <= L <= sweep_max:
        raise UsageError(f"class sweep needs 2 <= L <= {sweep_max}, got {L}")
    workers = resolve_workers(workers)
    prefixes = comb.block_prefixes(L, depth=1 if L < 9 else 2)
    sizes: Counter = Counter()
    avoiders: Counter = Counter()
    if workers == 1 or L < 8:
        s, a = _block_census(L, prefixes)
        sizes.update(s)
        avoiders.update(a)
    else:
        chunks = [prefixes[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for s, a in pool.map(_block_census, [L] * len(chunks), chunks):
                sizes.update(s)
                avoiders.update(a)

    rows = []
    for n_s in sorted(sizes):
        size = sizes[n_s]
        if size % n_s:
            raise InvariantError(f"class n_s={n_s} of size {size} at L={L} is not divisible")
        rows.append(ClassRow(n_s, size, size // n_s, avoiders[n_s], closed_form_N(L, n_s)))
    inverse_sum = sum((Fraction(size, n_s) for n_s, size in sizes.items()), Fraction(0))
    return ClassTable(L, tuple(rows), comb.catalan(L), inverse_sum)


def _pos(x: int) -> int:
    return max(x, 0)


def _pow2_times(exp: int, value: Fraction) -> int:
    out = value * (Fraction(2) ** exp)
    if out.denominator != 1:
        raise InvariantError(f"closed form produced non-integer {out}")
    return int(out)


def closed_form_N(L: int, n_s: int) -> int | None:
    """Published closed form for ``N_L(n_s) = |s| / n_s``; None when unlisted."""
    if L < 2:
        raise DomainError("closed forms are stated for L >= 2")
    if n_s == 1:
        return 2 ** (L - 1)
    if n_s == 2:
        return _pow2_times(L - 3, Fraction(_pos(L - 2)))
    if n_s == 4:
        return _pow2_times(L - 6, Fraction(_pos(L - 3) * (L + 4)))
    if n_s == 8:
        return _pow2_times(L - 7, _pos(L - 4) * (Fraction(L * (L + 13), 6) + 1))
    if n_s == 12:
        return _pow2_times(L - 5, Fraction(_pos(L - 4)))
    if n_s == 24:
        return _pow2_times(L - 7, Fraction(_pos(L - 5) * (L + 2)))
    if n_s == 36:
        return _pow2_times(L - 5, Fraction(_pos(L - 5)))
    return None


def min_fraction(L: int) -> tuple[int, int]:
    """Claimed largest ``n_s`` and its class size, by parity of ``L``."""
    if L < 4:
        raise DomainError("min_fraction is stated for L >= 4")
    ell, odd = divmod(L, 2)
    f = math.factorial
    if odd:
        n_max = f(ell) * f(ell + 1)
        return n_max, n_max
    return f(ell) ** 2, 2 * f(ell) ** 2


def wheel_residue(n: int, check_max: int = 8, workers: int | None = None) -> WheelResidue:
    """``res G_n = 2 binom(2n-2, n-1) pi^(2n) zeta(2n-3)``.

    For ``L = n - 1 <= check_max`` the rational coefficient is recomputed as
    ``(L+1) * 2 * sum_sigma 1/n_sigma`` from the sector sweep and must agree.
    """
    if n <= 2:
        raise DivergenceError(f"divergent zeta argument: res G_{n} involves zeta({2 * n - 3})")
    coefficient = Fraction(2 * binomial(2 * n - 2, n - 1))
    numeric = float(coefficient) * math.pi ** (2 * n) * zeta_odd(2 * n - 3)
    sector_coeff = None
    L = n - 1
    if L <= check_max:
        table = class_table(L, workers=workers, sweep_max=max(check_max, DEFAULT_SWEEP_MAX))
        sector_coeff = (L + 1) * 2 * table.inverse_sum
        if sector_coeff != coefficient:
            raise InvariantError(
                f"sector sum gives {sector_coeff}, binomial formula gives {coefficient}"
            )
    return WheelResidue(n, coefficient, 2 * n, 2 * n - 3, numeric, sector_coeff)
