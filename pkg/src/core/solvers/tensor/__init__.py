"""
Módulo de tensores simétricos - contracciones y normas de operador.
"""

from .contractions import contract3, contract_matrix, frobenius, contract4, frobenius4, symmetric_matrix
from .sphere_maximizer import SphereMaximizer, maximize_abs_on_sphere
from .operator_norm import (
    whitening_factor,
    opnorm_sphere,
    opnorm_sphere_result,
    weighted_opnorm,
    opnorm_sphere4,
    weighted_opnorm4,
    sphere_minimum4,
)

__all__ = [
    "contract3",
    "contract_matrix",
    "frobenius",
    "contract4",
    "frobenius4",
    "symmetric_matrix",
    "SphereMaximizer",
    "maximize_abs_on_sphere",
    "whitening_factor",
    "opnorm_sphere",
    "opnorm_sphere_result",
    "weighted_opnorm",
    "opnorm_sphere4",
    "weighted_opnorm4",
    "sphere_minimum4",
]
