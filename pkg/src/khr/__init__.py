"""Exact calculator for the triply graded (a, q, t) superpolynomial of
(m, n) torus knots.

Two independent evaluators are provided and cross-checked against each
other: a closed-form sum over (m, n)-Dyck paths weighted by their
statistics, and a sweep-line recursion over lattice-point events that
transforms a family of intervals and branches once per path.  All
arithmetic is exact integer arithmetic on sparse Laurent polynomials.
"""

__version__ = "0.1.0"

from .laurent import Invariant, LaurentPoly
from .dyck import DyckPath, KnotParams, LinksUnsupported, enumerate_paths, rational_catalan
from .sweep import HHH_PROFILE, TORIC_PROFILE, evaluate
from .formula import euler_characteristic, hhh_direct, superpolynomial
from .verify import run_suite

__all__ = [
    "DyckPath",
    "HHH_PROFILE",
    "Invariant",
    "KnotParams",
    "LaurentPoly",
    "LinksUnsupported",
    "TORIC_PROFILE",
    "enumerate_paths",
    "euler_characteristic",
    "evaluate",
    "hhh_direct",
    "rational_catalan",
    "run_suite",
    "superpolynomial",
    "__version__",
]
