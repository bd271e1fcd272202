"""
Módulo de Laplace - modo, ajuste gaussiano y potencial blanqueado.
"""

from .newton import NewtonModeFinder, find_mode
from .fit import fit
from .whitening import (
    whitened_point,
    whitened_potential,
    whitened_potential_batch,
    whitened_gradient,
    whitened_gradient_batch,
    whitened_third_contract,
    whitened_third_contract_batch,
    whitened_third_tensor,
    whitened_fourth_tensor,
    r3,
    r4,
    r3_batch,
)

__all__ = [
    "NewtonModeFinder",
    "find_mode",
    "fit",
    "whitened_point",
    "whitened_potential",
    "whitened_potential_batch",
    "whitened_gradient",
    "whitened_gradient_batch",
    "whitened_third_contract",
    "whitened_third_contract_batch",
    "whitened_third_tensor",
    "whitened_fourth_tensor",
    "r3",
    "r4",
    "r3_batch",
]
