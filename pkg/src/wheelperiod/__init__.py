"""Exact sector census and numerical oracles for wheel-graph Feynman periods."""

__version__ = "0.1.0"

from .combinatorics import (
    as_permutation,
    catalan,
    contains_forbidden_pattern,
    enumerate_permutations,
    min_class_representative,
    reflect,
    s1_generate,
)
from .conformal import EIRTriple, Sextuplet, casimirs, dual, sextuplet, twist
from .residue import (
    ClassRow,
    ClassTable,
    SectorEvaluation,
    WheelResidue,
    class_table,
    closed_form_N,
    exponent_slopes,
    min_fraction,
    n_sigma,
    wheel_residue,
)
from .special import PrecisionBudget, binomial, gegenbauer, polylog, zeta_odd
