"""
Módulo de Hermite - identidades gaussianas de tensores de orden 3.
"""

from .moments import (
    hermite3_apply,
    hermite3_apply_batch,
    cubic_second_moment,
    hypercontractive_moment_bound,
    operator_moment_bound,
    mc_cubic_moment,
    mc_hermite_moment,
)

__all__ = [
    "hermite3_apply",
    "hermite3_apply_batch",
    "cubic_second_moment",
    "hypercontractive_moment_bound",
    "operator_moment_bound",
    "mc_cubic_moment",
    "mc_hermite_moment",
]
