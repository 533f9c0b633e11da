"""Invariant suites behind ``wheelperiod verify``."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np

from . import combinatorics as comb
from .conformal import casimirs
from .errors import InvariantError
from .report import Report
from .residue import class_table, closed_form_N, min_fraction, n_sigma, wheel_residue
from .special import gegenbauer, zeta_odd

PUBLISHED_SECTORS = {
    (2, 3, 1, 4): 4,
    (4, 2, 1, 3, 5): 12,
    # printed as (14235); that sector evaluates to n = 4, the 1/8 class is reached by (41235)
    (4, 1, 2, 3, 5): 8,
}


def a7_swap(L: int) -> tuple[int, ...]:
    """Identity with the entries ``L-2`` and ``L-1`` interchanged."""
    sigma = list(range(1, L + 1))
    sigma[L - 3], sigma[L - 2] = sigma[L - 2], sigma[L - 3]
    return tuple(sigma)


def exact_checks(report: Report, L_max: int, workers: int | None = None) -> None:
    exhaustive_max = min(L_max, 8)
    for L in range(2, L_max + 1):
        report.check(f"identity_sector[L={L}]", n_sigma(range(1, L + 1)).n_sigma == 1)
        if L >= 3:
            report.check(f"a7_swap[L={L}]", n_sigma(a7_swap(L)).n_sigma == 2)
    for sigma, expected in PUBLISHED_SECTORS.items():
        if len(sigma) <= L_max:
            got = n_sigma(sigma).n_sigma
            report.check(f"published_sector{sigma}", got == expected, f"n={got}")

    for L in range(2, L_max + 1):
        try:
            table = class_table(L, workers=workers, sweep_max=max(L_max, 10))
        except InvariantError as exc:
            report.check(f"census[L={L}]", False, str(exc))
            continue
        report.check(f"catalan_sum[L={L}]", table.sum_check, f"sum 1/n = {table.inverse_sum}")
        report.check(f"quotient_sum[L={L}]", table.quotient_sum == table.catalan)
        report.check(
            f"avoiders_match_quotients[L={L}]",
            all(r.avoiders == r.quotient for r in table.rows),
        )
        listed = [r for r in table.rows if r.closed_form is not None]
        report.check(
            f"closed_forms[L={L}]",
            all(r.closed_form == r.quotient for r in listed),
            f"{len(listed)}/{len(table.rows)} classes have a published formula",
        )
        if L <= 5:
            report.check(f"closed_forms_exhaustive[L={L}]", len(listed) == len(table.rows))
        ones = table.row(1)
        report.check(f"s1_class_size[L={L}]", ones is not None and ones.size == 2 ** (L - 1))
        if L >= 3:
            twos = table.row(2)
            report.check(
                f"class2_size[L={L}]",
                twos is not None and twos.size == (L - 2) * 2 ** (L - 2),
            )
        if L >= 4:
            fours = table.row(4)
            report.check(
                f"class4_size[L={L}]",
                fours is not None and fours.size == 2 ** (L - 4) * (L - 3) * (L + 4),
            )
            n_max, mult = min_fraction(L)
            top = table.rows[-1]
            rep = n_sigma(comb.min_class_representative(L)).n_sigma
            report.check(
                f"min_fraction[L={L}]",
                (top.n_s, top.size) == (n_max, mult) and rep == n_max,
                f"largest class n_s={top.n_s} size={top.size}, representative n={rep}",
            )

    for L in range(2, exhaustive_max + 1):
        s1 = comb.s1_generate(L)
        report.check(
            f"s1_members_exact[L={L}]",
            len(s1) == 2 ** (L - 1) and all(n_sigma(s).n_sigma == 1 for s in s1),
        )
        ok = True
        for sigma in comb.enumerate_permutations(L):
            ev = n_sigma(sigma)  # raises InvariantError on a broken ledger
            if n_sigma(comb.reflect(sigma)).n_sigma != ev.n_sigma or ev.divisors[-1] != 2:
                ok = False
                break
        report.check(f"reflection_and_ledger[L={L}]", ok)

    for n in range(3, exhaustive_max + 2):
        res = wheel_residue(n, check_max=exhaustive_max, workers=workers)
        report.check(
            f"residue_coefficient[n={n}]",
            res.sector_sum_coefficient == res.coefficient,
            res.symbolic,
        )

    report.check(
        "casimir_symmetric_series[ell<=50]",
        all(casimirs(1, l, l + 1) == (Fraction(2 * l * (l + 3)), 0, 0) for l in range(51)),
    )


def numeric_checks(report: Report, L_max: int, seed: int = 2013, mc_samples: int = 10**6) -> None:
    from .oracle import mc_full_residue, pl_series_residue, quad_sector_integral

    for L in range(2, min(L_max, 3) + 1):
        worst = 0.0
        for sigma in comb.enumerate_permutations(L):
            exact = 2 * zeta_odd(2 * L - 1) / n_sigma(sigma).n_sigma
            worst = max(worst, abs(quad_sector_integral(sigma, tol=1e-10) - exact) / exact)
        report.check(f"quad_oracle[L={L}]", worst <= 1e-7, f"max rel err {worst:.2e}")
    if L_max >= 4:
        rng = random.Random(seed)
        perms = list(comb.enumerate_permutations(4))
        worst = 0.0
        for sigma in rng.sample(perms, 20):
            exact = 2 * zeta_odd(7) / n_sigma(sigma).n_sigma
            worst = max(worst, abs(quad_sector_integral(sigma, tol=1e-9) - exact) / exact)
        report.check("quad_oracle[L=4, 20 random]", worst <= 1e-6, f"max rel err {worst:.2e}")

    for L, rel in ((2, 1e-6), (3, 1e-8), (4, 1e-8)):
        if L <= L_max:
            ref = wheel_residue(L + 1, check_max=0).numeric
            err = abs(pl_series_residue(L, 10**4) - ref) / ref
            report.check(f"pl_series[L={L}]", err <= rel, f"rel err {err:.2e}")

    theta = np.linspace(0.01, math.pi - 0.01, 100)
    cheb = max(
        float(np.max(np.abs(gegenbauer(m, 1.0, np.cos(theta)) - np.sin((m + 1) * theta) / np.sin(theta))))
        for m in range(51)
    )
    report.check("chebyshev_identity[m<=50]", cheb <= 1e-10, f"max err {cheb:.2e}")

    est = mc_full_residue(mc_samples, seed)
    ref = wheel_residue(3, check_max=0).numeric
    report.check(
        "mc_residue_G3",
        abs(est.value - ref) <= 3 * est.stderr,
        f"{est.value:.2f} +/- {est.stderr:.2f} vs {ref:.2f}",
    )
