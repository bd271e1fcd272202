"""
Envoltorios que transforman un modelo existente.

- AffineTransformedModel: v'(y) = v(Ay + b). La aproximación de Laplace es
  invariante afín, así que TV y L no cambian.
- RescaledModel: (v, n) → (λv, n/λ). Deja V = n·v intacto.
"""

from typing import Optional

import numpy as np

from .base_model import ModelCapabilities, RankOneStructure
from ...domain.errors import ArgumentError, DimensionMismatchError
from ...domain.tensors import SymTensor3, SymTensor4


class AffineTransformedModel(ModelCapabilities):
    """Composición del modelo con y ↦ Ay + b, A invertible."""

    name = "affine"
    description = "Modelo compuesto con una transformación afín"

    def __init__(self, model: ModelCapabilities, A, b=None):
        mat = np.asarray(A, dtype=float)
        if mat.shape != (model.dim, model.dim):
            raise DimensionMismatchError(f"A de forma {mat.shape}, se esperaba ({model.dim}, {model.dim})")
        if np.linalg.matrix_rank(mat) < model.dim:
            raise ArgumentError("La matriz A debe ser invertible")
        shift = np.zeros(model.dim) if b is None else np.asarray(b, dtype=float)
        if shift.shape != (model.dim,):
            raise DimensionMismatchError(f"b de forma {shift.shape}, se esperaba ({model.dim},)")
        super().__init__(model.dim, model.n)
        self.model = model
        self.A = mat
        self.b = shift

    def _inner(self, y) -> np.ndarray:
        return self.A @ self._point(y) + self.b

    def v(self, x) -> float:
        return self.model.v(self._inner(x))

    def grad_v(self, x) -> np.ndarray:
        return self.A.T @ self.model.grad_v(self._inner(x))

    def hess_v(self, x) -> np.ndarray:
        hess = self.A.T @ self.model.hess_v(self._inner(x)) @ self.A
        return 0.5 * (hess + hess.T)

    def third_contract_v(self, x, u) -> float:
        return self.model.third_contract_v(self._inner(x), self.A @ np.asarray(u, dtype=float))

    def third_gradient_v(self, x, u) -> np.ndarray:
        return self.A.T @ self.model.third_gradient_v(self._inner(x), self.A @ np.asarray(u, dtype=float))

    def fourth_contract_v(self, x, u) -> float:
        return self.model.fourth_contract_v(self._inner(x), self.A @ np.asarray(u, dtype=float))

    def fourth_gradient_v(self, x, u) -> np.ndarray:
        return self.A.T @ self.model.fourth_gradient_v(self._inner(x), self.A @ np.asarray(u, dtype=float))

    def third_tensor_v(self, x) -> Optional[SymTensor3]:
        tensor = self.model.third_tensor_v(self._inner(x))
        return None if tensor is None else tensor.whiten(self.A.T)

    def fourth_tensor_v(self, x) -> Optional[SymTensor4]:
        tensor = self.model.fourth_tensor_v(self._inner(x))
        return None if tensor is None else tensor.whiten(self.A.T)

    def rank_one_structure(self, x) -> Optional[RankOneStructure]:
        structure = self.model.rank_one_structure(self._inner(x))
        if structure is None:
            return None
        # (Aᵀ Xₗ)ᵀ como filas
        return RankOneStructure(weights=structure.weights, vectors=structure.vectors @ self.A)

    def v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        return self.model.v_batch(rows @ self.A.T + self.b)

    def grad_v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        return self.model.grad_v_batch(rows @ self.A.T + self.b) @ self.A

    def third_contract_v_batch(self, x, U) -> np.ndarray:
        return self.model.third_contract_v_batch(self._inner(x), np.asarray(U, dtype=float) @ self.A.T)


class RescaledModel(ModelCapabilities):
    """v' = λ·v con escala n' = n/λ."""

    name = "rescaled"
    description = "Modelo reescalado que conserva V = n·v"

    def __init__(self, model: ModelCapabilities, lam: float):
        if not np.isfinite(lam) or lam <= 0:
            raise ArgumentError(f"λ debe ser positivo y finito, se recibió {lam}")
        super().__init__(model.dim, model.n / lam)
        self.model = model
        self.lam = float(lam)

    def v(self, x) -> float:
        return self.lam * self.model.v(x)

    def grad_v(self, x) -> np.ndarray:
        return self.lam * self.model.grad_v(x)

    def hess_v(self, x) -> np.ndarray:
        return self.lam * self.model.hess_v(x)

    def third_contract_v(self, x, u) -> float:
        return self.lam * self.model.third_contract_v(x, u)

    def third_gradient_v(self, x, u) -> np.ndarray:
        return self.lam * self.model.third_gradient_v(x, u)

    def fourth_contract_v(self, x, u) -> float:
        return self.lam * self.model.fourth_contract_v(x, u)

    def fourth_gradient_v(self, x, u) -> np.ndarray:
        return self.lam * self.model.fourth_gradient_v(x, u)

    def third_tensor_v(self, x) -> Optional[SymTensor3]:
        tensor = self.model.third_tensor_v(x)
        return None if tensor is None else tensor.scaled(self.lam)

    def fourth_tensor_v(self, x) -> Optional[SymTensor4]:
        tensor = self.model.fourth_tensor_v(x)
        return None if tensor is None else tensor.scaled(self.lam)

    def rank_one_structure(self, x) -> Optional[RankOneStructure]:
        # Pesos en escala V = n·v, invariante
        return self.model.rank_one_structure(x)

    def v_batch(self, X) -> np.ndarray:
        return self.lam * self.model.v_batch(X)

    def grad_v_batch(self, X) -> np.ndarray:
        return self.lam * self.model.grad_v_batch(X)

    def third_contract_v_batch(self, x, U) -> np.ndarray:
        return self.lam * self.model.third_contract_v_batch(x, U)
