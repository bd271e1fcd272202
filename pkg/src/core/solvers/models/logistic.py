"""
Regresión logística con prior plano.

    v(b) = −(1/n) Σᵢ [Yᵢ log σ(bᵀXᵢ) + (1 − Yᵢ) log(1 − σ(bᵀXᵢ))]
         =  (1/n) Σᵢ [softplus(bᵀXᵢ) − Yᵢ·bᵀXᵢ]

    ⟨∇ᵏv(b), u⊗k⟩ = (1/n) Σᵢ σ^{(k−1)}(bᵀXᵢ)(uᵀXᵢ)ᵏ,  k ≥ 2

Todas las contracciones cuestan O(n·d); el tensor denso ∇³v solo se
construye a pedido y para d ≤ 64.
"""

from typing import Optional

import numpy as np

from .base_model import ModelCapabilities, RankOneStructure
from .sigmoid import sigmoid, sigmoid_prime, sigmoid_second, sigmoid_third, softplus
from ...domain.dataset import Dataset
from ...domain.tensors import SymTensor3, SymTensor4

# Filas por bloque al acumular tensores densos de rango uno
_DENSE_BLOCK = 2048
# Elementos máximos de la matriz de márgenes n × m en evaluaciones por lotes
_BATCH_ELEMENTS = 1 << 22


def rank_one_tensor3(weights: np.ndarray, vectors: np.ndarray) -> SymTensor3:
    """Σ_ℓ wₗ·Xₗ⊗3 como tensor denso, acumulado por bloques de filas."""
    d = vectors.shape[1]
    total = np.zeros((d, d * d))
    for start in range(0, vectors.shape[0], _DENSE_BLOCK):
        block = vectors[start:start + _DENSE_BLOCK]
        w = weights[start:start + _DENSE_BLOCK]
        outer = (block[:, :, None] * block[:, None, :]).reshape(block.shape[0], d * d)
        total += (block * w[:, None]).T @ outer
    return SymTensor3.symmetrize(total.reshape(d, d, d))


def rank_one_tensor4(weights: np.ndarray, vectors: np.ndarray) -> SymTensor4:
    """Σ_ℓ wₗ·Xₗ⊗4 como tensor denso."""
    d = vectors.shape[1]
    total = np.zeros((d * d, d * d))
    for start in range(0, vectors.shape[0], _DENSE_BLOCK):
        block = vectors[start:start + _DENSE_BLOCK]
        w = weights[start:start + _DENSE_BLOCK]
        outer = (block[:, :, None] * block[:, None, :]).reshape(block.shape[0], d * d)
        total += (outer * w[:, None]).T @ outer
    return SymTensor4.symmetrize(total.reshape(d, d, d, d))


class LogisticRegressionModel(ModelCapabilities):
    """Log-verosimilitud negativa normalizada de la regresión logística."""

    name = "logistic"
    description = "Regresión logística con diseño arbitrario y prior plano"

    def __init__(self, data: Dataset):
        super().__init__(data.d, data.n)
        self.data = data
        self._X = data.features
        self._y = data.labels.astype(float)

    def _margins(self, x) -> np.ndarray:
        return self._X @ self._point(x)

    def v(self, x) -> float:
        t = self._margins(x)
        return float(np.mean(softplus(t) - self._y * t))

    def grad_v(self, x) -> np.ndarray:
        t = self._margins(x)
        return self._X.T @ (sigmoid(t) - self._y) / self.n

    def hess_v(self, x) -> np.ndarray:
        t = self._margins(x)
        weighted = self._X * sigmoid_prime(t)[:, None]
        H = self._X.T @ weighted / self.n
        return 0.5 * (H + H.T)

    def third_contract_v(self, x, u) -> float:
        t = self._margins(x)
        s = self._X @ self._point(u)
        return float(np.sum(sigmoid_second(t) * s ** 3) / self.n)

    def third_gradient_v(self, x, u) -> np.ndarray:
        t = self._margins(x)
        s = self._X @ self._point(u)
        return self._X.T @ (sigmoid_second(t) * s ** 2) / self.n

    def fourth_contract_v(self, x, u) -> float:
        t = self._margins(x)
        s = self._X @ self._point(u)
        return float(np.sum(sigmoid_third(t) * s ** 4) / self.n)

    def fourth_gradient_v(self, x, u) -> np.ndarray:
        t = self._margins(x)
        s = self._X @ self._point(u)
        return self._X.T @ (sigmoid_third(t) * s ** 3) / self.n

    def third_tensor_v(self, x) -> Optional[SymTensor3]:
        if self.dim > self.MAX_DENSE_DIM:
            return None
        t = self._margins(x)
        return rank_one_tensor3(sigmoid_second(t) / self.n, self._X)

    def fourth_tensor_v(self, x) -> Optional[SymTensor4]:
        if self.dim > self.MAX_DENSE_DIM:
            return None
        t = self._margins(x)
        return rank_one_tensor4(sigmoid_third(t) / self.n, self._X)

    def rank_one_structure(self, x) -> Optional[RankOneStructure]:
        # Escala V = n·v: los pesos son σ''(Xₗᵀx) sin el factor 1/n
        t = self._margins(x)
        return RankOneStructure(weights=sigmoid_second(t), vectors=self._X)

    # ==================== EVALUACIÓN POR LOTES ====================

    def _column_blocks(self, m: int):
        width = max(1, _BATCH_ELEMENTS // self.data.n)
        for start in range(0, m, width):
            yield slice(start, start + width)

    def v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        out = np.empty(rows.shape[0])
        for block in self._column_blocks(rows.shape[0]):
            T = self._X @ rows[block].T  # n × m
            out[block] = np.mean(softplus(T) - self._y[:, None] * T, axis=0)
        return out

    def grad_v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        out = np.empty(rows.shape)
        for block in self._column_blocks(rows.shape[0]):
            residual = sigmoid(self._X @ rows[block].T) - self._y[:, None]
            out[block] = (self._X.T @ residual).T / self.n
        return out

    def third_contract_v_batch(self, x, U) -> np.ndarray:
        weights = sigmoid_second(self._margins(x))
        directions = self._points(U)
        out = np.empty(directions.shape[0])
        for block in self._column_blocks(directions.shape[0]):
            S = self._X @ directions[block].T
            out[block] = weights @ S ** 3 / self.n
        return out


def logistic_model(data: Dataset) -> LogisticRegressionModel:
    """Construye el modelo logístico para un conjunto de datos."""
    return LogisticRegressionModel(data)
