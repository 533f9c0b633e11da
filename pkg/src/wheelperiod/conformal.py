"""Elementary induced representations of SU(2,2) and their exceptional sextuplets.

An EIR is labelled ``[d; j1, j2]``.  Exceptional sextuplets are parametrised
by integers ``(nu, ell, n)`` with ``nu >= 1``, ``ell >= 0`` and
``1 <= n <= 2 ell + 1``; the six members share their Casimir eigenvalues.
Half-integers are carried as exact :class:`~fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


def _half_integer(x) -> Fraction:
    f = Fraction(x)
    if f < 0 or (2 * f).denominator != 1:
        raise DomainError(f"Lorentz weight {x} is not a non-negative half-integer")
    return f


@dataclass(frozen=True)
class EIRTriple:
    d: Fraction
    j1: Fraction
    j2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d", Fraction(self.d))
        object.__setattr__(self, "j1", _half_integer(self.j1))
        object.__setattr__(self, "j2", _half_integer(self.j2))

    @property
    def twist(self) -> Fraction:
        return twist(self)

    @property
    def is_gci(self) -> bool:
        """Integer twist, i.e. a proper (not projective) representation."""
        return self.twist.denominator == 1

    @property
    def positive_twist(self) -> bool:
        return self.is_gci and self.twist >= 1

    def cubic_casimir(self) -> Fraction:
        """``C_3 = (d - 2)(j1 - j2)(j1 + j2 + 1)``."""
        return (self.d - 2) * (self.j1 - self.j2) * (self.j1 + self.j2 + 1)

    def __str__(self) -> str:
        return f"[{self.d}; {self.j1}, {self.j2}]"


def twist(chi: EIRTriple) -> Fraction:
    return chi.d - chi.j1 - chi.j2


def dual(chi: EIRTriple) -> EIRTriple:
    """``[4 - d; j2, j1]``."""
    return EIRTriple(4 - chi.d, chi.j2, chi.j1)


@dataclass(frozen=True)
class Sextuplet:
    nu: int
    ell: int
    n_label: int
    chi_minus_nu: EIRTriple
    chi_0: EIRTriple
    chi_n: EIRTriple

    @property
    def top_row(self) -> tuple[EIRTriple, EIRTriple, EIRTriple]:
        return (self.chi_minus_nu, self.chi_0, self.chi_n)

    @property
    def bottom_row(self) -> tuple[EIRTriple, EIRTriple, EIRTriple]:
        return tuple(dual(c) for c in self.top_row)

    @property
    def members(self) -> tuple[EIRTriple, ...]:
        return self.top_row + self.bottom_row

    @property
    def intertwiner_orders(self) -> tuple[int, int, int]:
        """Orders of ``chi_-nu -> chi_0``, ``chi_0 -> chi_n`` and the cross maps."""
        return (self.nu, self.n_label, 2 * self.ell + 2 - self.n_label)

    @property
    def labels(self) -> tuple[Fraction, Fraction, Fraction]:
        """``d + ell - 1`` of the top row, i.e. ``(-nu, 0, n)``."""
        return tuple(c.d + self.ell - 1 for c in self.top_row)


def check_labels(nu: int, ell: int, n_label: int) -> None:
    if nu < 1:
        raise DomainError(f"nu must be >= 1, got {nu}")
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    if not 1 <= n_label <= 2 * ell + 1:
        raise DomainError(f"n must satisfy 1 <= n <= 2*ell+1 = {2 * ell + 1}, got {n_label}")


def sextuplet(nu: int, ell: int, n_label: int) -> Sextuplet:
    """The three EIRs of the top exact sequence; their duals form the bottom one.

    ``chi_n`` is obtained from ``chi_0`` by the order-``n`` intertwiner, which
    shifts ``(j1, j2)`` by ``(+n/2, -n/2)``; this keeps the cubic Casimir
    equal across all six members.
    """
    check_labels(nu, ell, n_label)
    h = Fraction(1, 2)
    chi_minus_nu = EIRTriple(1 - ell - nu, ell - (n_label - 1) * h, (n_label - 1) * h)
    chi_0 = EIRTriple(1 - ell, ell + (nu - n_label + 1) * h, (nu + n_label - 1) * h)
    chi_n = EIRTriple(1 - ell + n_label, ell + (nu + 1) * h, (nu - 1) * h)
    return Sextuplet(nu, ell, n_label, chi_minus_nu, chi_0, chi_n)


def casimirs(nu: int, ell: int, n_label: int) -> tuple[Fraction, Fraction, Fraction]:
    """Quadratic, cubic and quartic Casimir eigenvalues of the sextuplet."""
    check_labels(nu, ell, n_label)
    l, v, n = Fraction(ell), Fraction(nu), Fraction(n_label)
    c2 = (l + 1 - n) ** 2 + l * (l + 2) + (l + v + 3) * (l + v - 1)
    c3 = -(l + 1) * (l + 1 - n) * (l + 1 + v)
    c4 = (
        n**2 * (2 * l + 2 - n) ** 2
        + 1
        - 2 * ((l + 1) ** 2 + (l + 1 - n) ** 2) * ((l + v + 1) ** 2 + 1)
        + (l + v + 1) ** 2 * ((l + v + 1) ** 2 - 2)
    )
    return c2, c3, c4
