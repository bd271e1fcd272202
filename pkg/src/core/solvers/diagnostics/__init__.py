"""
Módulo de diagnósticos - cantidades computables del error de Laplace.
"""

from .leading_term import LeadingTermEstimator, estimate_L
from .coefficients import C3Estimator, C4Estimator, tilde_c3, estimate_c3, estimate_c4
from .assumptions import check_a2_left, radius_conditions
from .lsi import LsiEstimator, lsi_bound_estimate
from .report import assemble_report

__all__ = [
    "LeadingTermEstimator",
    "estimate_L",
    "C3Estimator",
    "C4Estimator",
    "tilde_c3",
    "estimate_c3",
    "estimate_c4",
    "check_a2_left",
    "radius_conditions",
    "LsiEstimator",
    "lsi_bound_estimate",
    "assemble_report",
]
