"""
Potencial polinomial de prueba con derivadas exactas.

    v(x) = ½xᵀHx + (s/6)⟨S, x⊗3⟩ + (1/24)⟨T, x⊗4⟩

Con S = 0 y T = 0 el posterior es exactamente gaussiano.
"""

import logging
from typing import Optional

import numpy as np

from .base_model import ModelCapabilities
from ..tensor.operator_norm import sphere_minimum4
from ...domain.errors import ArgumentError, DimensionMismatchError
from ...domain.tensors import SymTensor3, SymTensor4

logger = logging.getLogger(__name__)

# Tolerancia relativa para aceptar un término cuártico semidefinido
QUARTIC_TOLERANCE = 1e-12


class QuarticTestModel(ModelCapabilities):
    """Modelo cuártico con H definida positiva y término cuártico no negativo."""

    name = "quartic"
    description = "Potencial polinomial de grado 4 (prueba de extremo a extremo)"

    def __init__(
        self,
        H,
        S: Optional[SymTensor3] = None,
        T: Optional[SymTensor4] = None,
        n: float = 1.0,
        scale: float = 1.0,
        seed: int = 0,
    ):
        hessian = np.asarray(H, dtype=float)
        if hessian.ndim != 2 or hessian.shape[0] != hessian.shape[1]:
            raise ArgumentError(f"H debe ser una matriz cuadrada, forma {hessian.shape}")
        dim = hessian.shape[0]
        super().__init__(dim, n)

        if not np.allclose(hessian, hessian.T, rtol=1e-10, atol=1e-12):
            raise ArgumentError("H debe ser simétrica")
        try:
            np.linalg.cholesky(hessian)
        except np.linalg.LinAlgError as exc:
            raise ArgumentError("H debe ser definida positiva") from exc

        self.H = 0.5 * (hessian + hessian.T)
        self.S = S if S is not None else SymTensor3.zeros(dim)
        self.T = T if T is not None else SymTensor4.zeros(dim)
        self.scale = float(scale)
        for tensor in (self.S, self.T):
            if tensor.dim != dim:
                raise DimensionMismatchError(f"Tensor de dimensión {tensor.dim} con H de dimensión {dim}")

        self._check_bounded_below(seed)

    def _check_bounded_below(self, seed: int) -> None:
        has_cubic = self.scale != 0.0 and not self.S.is_zero()
        if self.T.is_zero():
            if has_cubic:
                raise ArgumentError("Potencial no acotado inferiormente: término cúbico sin término cuártico")
            return
        minimum = sphere_minimum4(self.T, seed=seed)
        tolerance = QUARTIC_TOLERANCE * max(1.0, self.T.frobenius())
        logger.debug("Mínimo esférico del término cuártico: %.6g", minimum)
        if has_cubic and minimum <= 0.0:
            raise ArgumentError(
                f"Potencial no acotado inferiormente: el término cuártico no es definido positivo (mínimo {minimum:.3g})"
            )
        if minimum < -tolerance:
            raise ArgumentError(
                f"Potencial no acotado inferiormente: mínimo esférico del término cuártico {minimum:.3g}"
            )

    def v(self, x) -> float:
        vec = self._point(x)
        return float(
            0.5 * vec @ self.H @ vec
            + self.scale / 6.0 * self.S.contract(vec)
            + self.T.contract(vec) / 24.0
        )

    def grad_v(self, x) -> np.ndarray:
        vec = self._point(x)
        return self.H @ vec + 0.5 * self.scale * self.S.vector_contract(vec) + self.T.vector_contract(vec) / 6.0

    def hess_v(self, x) -> np.ndarray:
        vec = self._point(x)
        hess = self.H + self.scale * self.S.matrix_contract(vec) + 0.5 * self.T.matrix_contract(vec)
        return 0.5 * (hess + hess.T)

    def third_contract_v(self, x, u) -> float:
        vec = self._point(x)
        direction = np.asarray(u, dtype=float)
        return float(self.scale * self.S.contract(direction) + self.T.vector_contract(direction) @ vec)

    def third_gradient_v(self, x, u) -> np.ndarray:
        vec = self._point(x)
        direction = np.asarray(u, dtype=float)
        return self.scale * self.S.vector_contract(direction) + self.T.matrix_contract(direction) @ vec

    def fourth_contract_v(self, x, u) -> float:
        return self.T.contract(u)

    def fourth_gradient_v(self, x, u) -> np.ndarray:
        return self.T.vector_contract(u)

    def third_tensor_v(self, x) -> Optional[SymTensor3]:
        vec = self._point(x)
        entries = self.scale * self.S.entries + self.T.tensor_contract(vec).entries
        return SymTensor3(entries, check_symmetry=False)

    def fourth_tensor_v(self, x) -> Optional[SymTensor4]:
        return self.T

    def third_contract_v_batch(self, x, U) -> np.ndarray:
        return self.third_tensor_v(x).contract_batch(U)

    def v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        quadratic = 0.5 * np.einsum("mi,ij,mj->m", rows, self.H, rows)
        return quadratic + self.scale / 6.0 * self.S.contract_batch(rows) + self.T.contract_batch(rows) / 24.0


def quartic_test_model(
    d: int,
    H,
    S: Optional[SymTensor3] = None,
    T: Optional[SymTensor4] = None,
    n: float = 1.0,
    scale: float = 1.0,
) -> QuarticTestModel:
    """Construye el modelo cuártico verificando que d coincida con H."""
    model = QuarticTestModel(H, S, T, n=n, scale=scale)
    if model.dim != d:
        raise DimensionMismatchError(f"H tiene dimensión {model.dim}, se indicó d={d}")
    return model
