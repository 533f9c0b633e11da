"""Independent numerical checks of the exact sector engine."""

from .montecarlo import McEstimate, mc_full_residue
from .quadrature import quad_sector_integral, radial_kernel, truncation_tail_bound
from .series import broadhurst_coeff, pl_series_residue

__all__ = [
    "McEstimate",
    "broadhurst_coeff",
    "mc_full_residue",
    "pl_series_residue",
    "quad_sector_integral",
    "radial_kernel",
    "truncation_tail_bound",
]
