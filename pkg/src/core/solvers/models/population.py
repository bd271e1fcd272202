"""
Posterior poblacional idealizado de la regresión logística.

    v̄(b) = E_X[softplus(bᵀX) − σ(βᵀX)·bᵀX],  X ~ N(0, I_d),  β = e₁

Todas las cantidades dependen de b solo a través de ρ = ‖b‖ y b̂ = b/ρ:
con Z = b̂ᵀX y la parte ortogonal independiente, cada esperanza
d-dimensional se reduce exactamente a momentos unidimensionales
m_{k,p}(ρ) = E[σ^{(k)}(ρZ)Zᵖ] evaluados por Gauss–Hermite.

Para una dirección u se escribe α = b̂ᵀu, s = ‖u‖² y γ² = s − α²:

    ⟨∇³v̄(b), u⊗3⟩ = m₂,₃α³ + 3m₂,₁αγ²
    ⟨∇⁴v̄(b), u⊗4⟩ = m₃,₄α⁴ + 6m₃,₂α²γ² + 3m₃,₀γ⁴

En b = β se recuperan ∇²v̄ = diag(a₁,₂, a₁,₀, ..., a₁,₀) y la contracción
cúbica n(a₂,₃b₁³ + 3a₂,₁b₁‖b₂:d‖²).
"""

from typing import Optional, Tuple

import numpy as np

from .base_model import ModelCapabilities
from .gaussian_moments import (
    DEFAULT_QUADRATURE_ORDER,
    folded_hermite_rule,
    sigmoid_moment_table,
    softplus_expectation,
)
from .sigmoid import softplus
from ...domain.errors import ArgumentError
from ...domain.tensors import SymTensor3, SymTensor4


class PopulationLogisticModel(ModelCapabilities):
    """Potencial v̄ del posterior poblacional con β = e₁."""

    name = "population"
    description = "Posterior poblacional de la regresión logística con diseño gaussiano"

    def __init__(self, dim: int, n: float, quadrature_order: int = DEFAULT_QUADRATURE_ORDER):
        super().__init__(dim, n)
        self.quadrature_order = quadrature_order
        # a₁,₀ = E[σ'(Z)] = E[σ(Z)Z]
        self._a10 = float(sigmoid_moment_table(1.0, quadrature_order)[0, 0])

    @property
    def beta(self) -> np.ndarray:
        beta = np.zeros(self.dim)
        beta[0] = 1.0
        return beta

    def _polar(self, x) -> Tuple[float, np.ndarray, np.ndarray]:
        b = self._point(x)
        rho = float(np.linalg.norm(b))
        if rho == 0.0:
            direction = np.zeros(self.dim)
            direction[0] = 1.0
        else:
            direction = b / rho
        return rho, direction, sigmoid_moment_table(rho, self.quadrature_order)

    @staticmethod
    def _direction_terms(direction: np.ndarray, u) -> Tuple[np.ndarray, float, float]:
        vec = np.asarray(u, dtype=float)
        alpha = float(direction @ vec)
        return vec, alpha, float(vec @ vec)

    def v(self, x) -> float:
        b = self._point(x)
        rho = float(np.linalg.norm(b))
        return softplus_expectation(rho, self.quadrature_order) - float(b[0]) * self._a10

    def grad_v(self, x) -> np.ndarray:
        rho, direction, m = self._polar(x)
        grad = m[0, 0] * rho * direction
        grad[0] -= self._a10
        return grad

    def hess_v(self, x) -> np.ndarray:
        _, direction, m = self._polar(x)
        outer = np.outer(direction, direction)
        return m[0, 2] * outer + m[0, 0] * (np.eye(self.dim) - outer)

    def third_contract_v(self, x, u) -> float:
        _, direction, m = self._polar(x)
        _, alpha, s = self._direction_terms(direction, u)
        gamma2 = s - alpha * alpha
        return float(m[1, 3] * alpha ** 3 + 3.0 * m[1, 1] * alpha * gamma2)

    def third_gradient_v(self, x, u) -> np.ndarray:
        _, direction, m = self._polar(x)
        vec, alpha, s = self._direction_terms(direction, u)
        return (m[1, 3] - 3.0 * m[1, 1]) * alpha ** 2 * direction + m[1, 1] * (s * direction + 2.0 * alpha * vec)

    def _fourth_coefficients(self, m: np.ndarray) -> Tuple[float, float, float]:
        quartic = m[2, 4] - 6.0 * m[2, 2] + 3.0 * m[2, 0]
        mixed = 6.0 * m[2, 2] - 6.0 * m[2, 0]
        return quartic, mixed, 3.0 * m[2, 0]

    def fourth_contract_v(self, x, u) -> float:
        _, direction, m = self._polar(x)
        _, alpha, s = self._direction_terms(direction, u)
        quartic, mixed, square = self._fourth_coefficients(m)
        return float(quartic * alpha ** 4 + mixed * alpha ** 2 * s + square * s * s)

    def fourth_gradient_v(self, x, u) -> np.ndarray:
        _, direction, m = self._polar(x)
        vec, alpha, s = self._direction_terms(direction, u)
        quartic, mixed, square = self._fourth_coefficients(m)
        full = (
            4.0 * quartic * alpha ** 3 * direction
            + mixed * (2.0 * alpha * s * direction + 2.0 * alpha ** 2 * vec)
            + 4.0 * square * s * vec
        )
        return full / 4.0

    def third_tensor_v(self, x) -> Optional[SymTensor3]:
        if self.dim > self.MAX_DENSE_DIM:
            return None
        _, b, m = self._polar(x)
        eye = np.eye(self.dim)
        entries = (m[1, 3] - 3.0 * m[1, 1]) * np.einsum("i,j,k->ijk", b, b, b) + m[1, 1] * (
            np.einsum("i,jk->ijk", b, eye)
            + np.einsum("j,ik->ijk", b, eye)
            + np.einsum("k,ij->ijk", b, eye)
        )
        return SymTensor3.symmetrize(entries)

    def fourth_tensor_v(self, x) -> Optional[SymTensor4]:
        if self.dim > self.MAX_DENSE_DIM:
            return None
        _, b, m = self._polar(x)
        eye = np.eye(self.dim)
        bb = np.outer(b, b)
        pairings = (
            np.einsum("ij,kl->ijkl", bb, eye)
            + np.einsum("ik,jl->ijkl", bb, eye)
            + np.einsum("il,jk->ijkl", bb, eye)
            + np.einsum("jk,il->ijkl", bb, eye)
            + np.einsum("jl,ik->ijkl", bb, eye)
            + np.einsum("kl,ij->ijkl", bb, eye)
        )
        deltas = (
            np.einsum("ij,kl->ijkl", eye, eye)
            + np.einsum("ik,jl->ijkl", eye, eye)
            + np.einsum("il,jk->ijkl", eye, eye)
        )
        entries = (
            (m[2, 4] - 6.0 * m[2, 2] + 3.0 * m[2, 0]) * np.einsum("ij,kl->ijkl", bb, bb)
            + (m[2, 2] - m[2, 0]) * pairings
            + m[2, 0] * deltas
        )
        return SymTensor4.symmetrize(entries)

    def v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        rho = np.linalg.norm(rows, axis=1)
        nodes, weights, center = folded_hermite_rule(self.quadrature_order)
        scaled = rho[:, None] * nodes[None, :]
        expected = (softplus(scaled) + softplus(-scaled)) @ weights + center * np.log(2.0)
        return expected - rows[:, 0] * self._a10

    def third_contract_v_batch(self, x, U) -> np.ndarray:
        _, direction, m = self._polar(x)
        rows = np.asarray(U, dtype=float)
        alpha = rows @ direction
        gamma2 = np.einsum("ij,ij->i", rows, rows) - alpha ** 2
        return m[1, 3] * alpha ** 3 + 3.0 * m[1, 1] * alpha * gamma2


def population_logistic_model(
    d: int, n: float, quadrature_order: int = DEFAULT_QUADRATURE_ORDER
) -> PopulationLogisticModel:
    """
    Modelo poblacional para d ≥ 2.

    Raises:
        ArgumentError: si d < 2
    """
    if d < 2:
        raise ArgumentError(f"El modelo poblacional requiere d ≥ 2, se recibió d={d}")
    return PopulationLogisticModel(d, n, quadrature_order)
