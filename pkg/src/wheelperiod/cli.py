"""Command line front end: ``wheelperiod {classes,residue,verify,oracle,eir}``.

Exit codes: 0 success, 1 a check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys

from . import combinatorics as comb
from .conformal import casimirs, dual, sextuplet
from .errors import DomainError, PrecisionError, UsageError
from .report import Report
from .residue import DEFAULT_SWEEP_MAX, class_table, n_sigma, resolve_workers, wheel_residue
from .special import zeta_odd

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument(
        "--workers", type=int, default=None,
        help="parallel workers (default: $WHEELPERIOD_WORKERS or CPU count)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wheelperiod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classes", help="census of sector classes for one L")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--sweep-max", type=int, default=DEFAULT_SWEEP_MAX)
    _add_common(p)

    p = sub.add_parser("residue", help="residue of the wheel with n spokes")
    p.add_argument("--spokes", type=int, required=True)
    p.add_argument("--check-max", type=int, default=8,
                   help="largest L for the sector-sum cross-check")
    _add_common(p)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--L-max", dest="L_max", type=int, default=6)
    p.add_argument("--level", choices=("fast", "full"), default="fast")
    p.add_argument("--seed", type=int, default=2013)
    p.add_argument("--samples", type=int, default=10**6)
    _add_common(p)

    p = sub.add_parser("oracle", help="numerical oracles next to exact values")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--mc", action="store_true", help="Monte Carlo estimate of res G_3")
    mode.add_argument("--quad", action="store_true", help="quadrature of one sector")
    mode.add_argument("--pl-series", action="store_true", help="closed-series residue")
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--L", type=int)
    p.add_argument("--sigma", type=str, help="comma separated permutation, e.g. 2,1,3")
    p.add_argument("--terms", type=int, default=None,
                   help="series truncation (quad: kernel terms, default untruncated)")
    p.add_argument("--tol", type=float, default=1e-10)
    _add_common(p)

    p = sub.add_parser("eir", help="exceptional sextuplet for (nu, ell, n)")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", dest="n_label", type=int, required=True)
    _add_common(p)
    return parser


def cmd_classes(args) -> Report:
    table = class_table(args.L, workers=args.workers, sweep_max=args.sweep_max)
    report = Report("classes", {"L": args.L})
    for r in table.rows:
        report.rows.append({
            "n_s": r.n_s, "size": r.size, "quotient": r.quotient, "avoiders": r.avoiders,
            "closed_form": r.closed_form, "closed_form_status": r.closed_form_status,
        })
    report.result = {
        "L": table.L, "catalan": table.catalan, "inverse_sum": table.inverse_sum,
        "quotient_sum": table.quotient_sum, "sum_check": table.sum_check,
    }
    report.check("sum_inverse_n_equals_catalan", table.sum_check, str(table.inverse_sum))
    report.check("quotients_sum_to_catalan", table.quotient_sum == table.catalan)
    report.check("avoiders_equal_quotients", all(r.avoiders == r.quotient for r in table.rows))
    report.check(
        "published_closed_forms",
        all(r.closed_form in (None, r.quotient) for r in table.rows),
    )
    return report


def cmd_residue(args) -> Report:
    res = wheel_residue(args.spokes, check_max=args.check_max, workers=args.workers)
    report = Report("residue", {"spokes": args.spokes})
    report.rows.append({
        "spokes": res.spokes, "coefficient": res.coefficient, "pi_power": res.pi_power,
        "zeta_argument": res.zeta_argument, "numeric": res.numeric,
    })
    report.result = {
        "symbolic": res.symbolic,
        "numeric": res.numeric,
        "sector_sum_coefficient": res.sector_sum_coefficient,
    }
    if res.sector_sum_coefficient is not None:
        report.check(
            "sector_sum_matches_binomial",
            res.sector_sum_coefficient == res.coefficient,
            f"{res.sector_sum_coefficient} vs {res.coefficient}",
        )
    return report


def cmd_verify(args) -> Report:
    from .verify import exact_checks, numeric_checks

    if not 2 <= args.L_max <= DEFAULT_SWEEP_MAX:
        raise UsageError(f"--L-max must lie in 2..{DEFAULT_SWEEP_MAX}")
    report = Report("verify", {"L_max": args.L_max, "level": args.level})
    exact_checks(report, args.L_max, workers=args.workers)
    if args.level == "full":
        numeric_checks(report, args.L_max, seed=args.seed, mc_samples=args.samples)
    return report


def cmd_oracle(args) -> Report:
    from .oracle import mc_full_residue, pl_series_residue, quad_sector_integral

    if args.mc:
        est = mc_full_residue(args.samples, args.seed, workers=resolve_workers(args.workers))
        ref = wheel_residue(3, check_max=0).numeric
        report = Report("oracle", {"mode": "mc", "samples": args.samples, "seed": args.seed})
        report.rows.append({"estimate": est.value, "stderr": est.stderr, "reference": ref})
        report.result = {"reference_symbolic": "12 * pi^6 * zeta(3)"}
        report.check("within_3_stderr", abs(est.value - ref) <= 3 * est.stderr,
                     f"pull {(est.value - ref) / est.stderr:+.2f}")
        return report
    if args.quad:
        if not args.sigma:
            raise UsageError("--quad needs --sigma")
        sigma = comb.as_permutation(int(v) for v in args.sigma.split(","))
        if args.L is not None and args.L != len(sigma):
            raise UsageError(f"--L {args.L} does not match --sigma of length {len(sigma)}")
        L = len(sigma)
        value = quad_sector_integral(sigma, M=args.terms, tol=args.tol)
        ev = n_sigma(sigma)
        exact = 2 * zeta_odd(2 * L - 1) / ev.n_sigma
        report = Report("oracle", {"mode": "quad", "sigma": list(sigma), "terms": args.terms,
                                   "tol": args.tol})
        report.rows.append({"quadrature": value, "exact": exact, "n_sigma": ev.n_sigma})
        report.result = {"exact_symbolic": f"2 * zeta({2 * L - 1}) / {ev.n_sigma}"}
        rel = abs(value - exact) / exact
        report.check("quadrature_matches_exact", rel <= max(100 * args.tol, 1e-7),
                     f"rel err {rel:.2e}")
        return report
    if args.L is None:
        raise UsageError("--pl-series needs --L")
    terms = args.terms or 10**4
    value = pl_series_residue(args.L, terms)
    res = wheel_residue(args.L + 1, check_max=0)
    report = Report("oracle", {"mode": "pl-series", "L": args.L, "terms": terms})
    report.rows.append({"series": value, "reference": res.numeric})
    report.result = {"reference_symbolic": res.symbolic}
    rel = abs(value - res.numeric) / res.numeric
    report.check("series_matches_residue", rel <= 1e-6, f"rel err {rel:.2e}")
    return report


def cmd_eir(args) -> Report:
    sx = sextuplet(args.nu, args.ell, args.n_label)
    c2, c3, c4 = casimirs(args.nu, args.ell, args.n_label)
    report = Report("eir", {"nu": args.nu, "ell": args.ell, "n": args.n_label})
    names = ("chi_-nu", "chi_0", "chi_n", "dual chi_-nu", "dual chi_0", "dual chi_n")
    for name, chi in zip(names, sx.members):
        report.rows.append({
            "name": name, "d": chi.d, "j1": chi.j1, "j2": chi.j2, "twist": chi.twist,
            "gci": chi.is_gci, "c3": chi.cubic_casimir(),
        })
    report.result = {
        "casimirs": [c2, c3, c4],
        "intertwiner_orders": list(sx.intertwiner_orders),
    }
    report.check("relatives_share_cubic_casimir",
                 all(chi.cubic_casimir() == c3 for chi in sx.members))
    report.check("dual_involution", all(dual(dual(chi)) == chi for chi in sx.members))
    if args.nu == 1 and args.n_label == args.ell + 1:
        l = args.ell
        report.check("symmetric_tensor_casimirs", (c2, c3, c4) == (2 * l * (l + 3), 0, 0),
                     f"C2 = {c2}")
    return report


COMMANDS = {
    "classes": cmd_classes,
    "residue": cmd_residue,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "eir": cmd_eir,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.workers is not None and args.workers < 1:
            raise UsageError("--workers must be >= 1")
        report = COMMANDS[args.command](args)
    except (UsageError, DomainError) as exc:
        print(f"wheelperiod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as exc:
        print(f"wheelperiod: precision: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(report.render(args.format))
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
