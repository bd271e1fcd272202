"""
Interfaz de capacidades de un potencial.

Un modelo describe v (el potencial normalizado por 1/n, V = n·v) y sus
derivadas. La capacidad principal son las contracciones direccionales
⟨∇ᵏv(x), u⊗k⟩ y sus gradientes respecto de u; los tensores densos son
opcionales.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ...domain.errors import ArgumentError, DimensionMismatchError
from ...domain.tensors import SymTensor3, SymTensor4


@dataclass(frozen=True)
class RankOneStructure:
    """∇³V(x) = Σ_ℓ weights[ℓ]·vectors[ℓ]⊗3 (escala V = n·v)."""
    weights: np.ndarray  # (m,)
    vectors: np.ndarray  # (m, d)


class ModelCapabilities(ABC):
    """
    Clase base abstracta para todos los potenciales.

    Las subclases implementan las evaluaciones puntuales; las versiones por
    lotes tienen una implementación por defecto en bucle que los modelos
    sobrescriben con código vectorizado.
    """

    name: str = "base_model"
    description: str = "Modelo base"

    # Tamaño máximo para el que se ofrecen tensores densos
    MAX_DENSE_DIM = 64

    def __init__(self, dim: int, n: float):
        if dim < 1:
            raise ArgumentError(f"La dimensión debe ser positiva, se recibió {dim}")
        if not np.isfinite(n) or n <= 0:
            raise ArgumentError(f"La escala n debe ser positiva y finita, se recibió {n}")
        self._dim = int(dim)
        self._n = float(n)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def n(self) -> float:
        return self._n

    # ==================== VALIDACIÓN ====================

    def _point(self, x) -> np.ndarray:
        vec = np.asarray(x, dtype=float)
        if vec.shape != (self._dim,):
            raise DimensionMismatchError(f"Punto de forma {vec.shape}, se esperaba ({self._dim},)")
        if not np.all(np.isfinite(vec)):
            raise ArgumentError("Evaluación del potencial en un punto no finito")
        return vec

    def _points(self, X) -> np.ndarray:
        rows = np.asarray(X, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != self._dim:
            raise DimensionMismatchError(f"Lote de forma {rows.shape} incompatible con d={self._dim}")
        if not np.all(np.isfinite(rows)):
            raise ArgumentError("Evaluación del potencial en puntos no finitos")
        return rows

    # ==================== CAPACIDADES OBLIGATORIAS ====================

    @abstractmethod
    def v(self, x) -> float:
        """Potencial normalizado v(x)."""

    @abstractmethod
    def grad_v(self, x) -> np.ndarray:
        """∇v(x)."""

    @abstractmethod
    def hess_v(self, x) -> np.ndarray:
        """∇²v(x), simétrica."""

    @abstractmethod
    def third_contract_v(self, x, u) -> float:
        """⟨∇³v(x), u⊗3⟩."""

    @abstractmethod
    def third_gradient_v(self, x, u) -> np.ndarray:
        """∇³v(x)[u, u, ·]."""

    @abstractmethod
    def fourth_contract_v(self, x, u) -> float:
        """⟨∇⁴v(x), u⊗4⟩."""

    @abstractmethod
    def fourth_gradient_v(self, x, u) -> np.ndarray:
        """∇⁴v(x)[u, u, u, ·]."""

    # ==================== CAPACIDADES OPCIONALES ====================

    def third_tensor_v(self, x) -> Optional[SymTensor3]:
        """∇³v(x) denso, o None si el modelo no lo ofrece."""
        return None

    def fourth_tensor_v(self, x) -> Optional[SymTensor4]:
        """∇⁴v(x) denso, o None si el modelo no lo ofrece."""
        return None

    def rank_one_structure(self, x) -> Optional[RankOneStructure]:
        """Descomposición en suma de rango uno de ∇³V(x), o None."""
        return None

    # ==================== EVALUACIÓN POR LOTES ====================

    def v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        return np.array([self.v(x) for x in rows])

    def grad_v_batch(self, X) -> np.ndarray:
        rows = self._points(X)
        return np.array([self.grad_v(x) for x in rows]).reshape(rows.shape)

    def third_contract_v_batch(self, x, U) -> np.ndarray:
        """⟨∇³v(x), uₘ⊗3⟩ para cada fila uₘ de U."""
        point = self._point(x)
        rows = np.asarray(U, dtype=float)
        return np.array([self.third_contract_v(point, u) for u in rows])

    def V(self, x) -> float:
        """Potencial sin normalizar V = n·v."""
        return self._n * self.v(x)
