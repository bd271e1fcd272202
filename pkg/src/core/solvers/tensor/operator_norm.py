"""
Normas de operador (esféricas y ponderadas) de tensores simétricos.

‖S‖_H = sup_{uᵀHu = 1} ⟨S, u⊗k⟩ se calcula blanqueando: con H = LLᵀ,
u = L⁻ᵀz recorre el elipsoide cuando z recorre la esfera, y
⟨S, (L⁻ᵀz)⊗k⟩ = ⟨S̃, z⊗k⟩ con S̃ = S·L⁻¹ en cada índice.
"""

from typing import Union

import numpy as np
from scipy.linalg import solve_triangular

from .sphere_maximizer import SphereMaximizer, maximize_abs_on_sphere
from ...domain.errors import DomainError
from ...domain.solver_result import SphereMaximizationResult
from ...domain.tensors import SymTensor3, SymTensor4
from .contractions import symmetric_matrix

Tensor = Union[SymTensor3, SymTensor4]


def whitening_factor(H) -> np.ndarray:
    """
    L⁻¹ con L el factor de Cholesky inferior de H.

    Raises:
        DomainError: si H no es definida positiva
    """
    mat = np.asarray(H, dtype=float)
    mat = symmetric_matrix(mat, mat.shape[0] if mat.ndim == 2 else -1)
    try:
        L = np.linalg.cholesky(mat)
    except np.linalg.LinAlgError as exc:
        raise DomainError("La matriz de ponderación no es definida positiva") from exc
    return solve_triangular(L, np.eye(mat.shape[0]), lower=True)


def _sphere_norm(
    S: Tensor, restarts: int, seed: int
) -> SphereMaximizationResult:
    k = S.order
    return maximize_abs_on_sphere(
        objective=S.contract,
        gradient=lambda u: k * S.vector_contract(u),
        dim=S.dim,
        restarts=restarts,
        seed=seed,
    )


def opnorm_sphere_result(
    S: Tensor, restarts: int = SphereMaximizer.DEFAULT_RESTARTS, seed: int = 0
) -> SphereMaximizationResult:
    """Como `opnorm_sphere`, conservando argumento y bandera de convergencia."""
    return _sphere_norm(S, restarts, seed)


def opnorm_sphere(S: SymTensor3, restarts: int = SphereMaximizer.DEFAULT_RESTARTS, seed: int = 0) -> float:
    """
    Estimación de max_{‖u‖=1} |⟨S, u⊗3⟩|.

    El valor es una cota inferior de ‖S‖ (optimización no convexa).
    """
    return _sphere_norm(S, restarts, seed).value


def weighted_opnorm(
    S: SymTensor3, H, restarts: int = SphereMaximizer.DEFAULT_RESTARTS, seed: int = 0
) -> float:
    """‖S‖_H estimada por blanqueo con Cholesky y `opnorm_sphere`."""
    return opnorm_sphere(S.whiten(whitening_factor(H)), restarts, seed)


def opnorm_sphere4(T: SymTensor4, restarts: int = SphereMaximizer.DEFAULT_RESTARTS, seed: int = 0) -> float:
    """Estimación de max_{‖u‖=1} |⟨T, u⊗4⟩|."""
    return _sphere_norm(T, restarts, seed).value


def weighted_opnorm4(
    T: SymTensor4, H, restarts: int = SphereMaximizer.DEFAULT_RESTARTS, seed: int = 0
) -> float:
    """‖T‖_H para tensores de orden 4."""
    return opnorm_sphere4(T.whiten(whitening_factor(H)), restarts, seed)


def sphere_minimum4(T: SymTensor4, restarts: int = SphereMaximizer.DEFAULT_RESTARTS, seed: int = 0) -> float:
    """
    Estimación de min_{‖u‖=1} ⟨T, u⊗4⟩.

    Al ser un mínimo encontrado numéricamente, es una cota superior del mínimo verdadero.
    """
    result = SphereMaximizer().solve(
        objective=lambda u: -T.contract(u),
        gradient=lambda u: -4.0 * T.vector_contract(u),
        dim=T.dim,
        restarts=restarts,
        seed=seed,
    )
    return -result.value
