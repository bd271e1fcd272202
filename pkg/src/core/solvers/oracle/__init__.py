"""
Módulo de oráculos - verdades de referencia independientes.
"""

from .tv_quadrature import LineQuadrature, TvOracle, tv_bruteforce
from .population_bounds import lemma31_lower_bound, population_L_exact
from .tail_bounds import gamma_tail_check, polar_tail_check

__all__ = [
    "TvOracle",
    "tv_bruteforce",
    "LineQuadrature",
    "lemma31_lower_bound",
    "population_L_exact",
    "gamma_tail_check",
    "polar_tail_check",
]
