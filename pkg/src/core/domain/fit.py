"""
Ajuste de Laplace: modo, Hessiano y transformación de blanqueo.
"""

from dataclasses import dataclass
from typing import List

import numpy as np
from pydantic import BaseModel, Field
from scipy.linalg import solve_triangular

from .errors import DimensionMismatchError


@dataclass(frozen=True)
class LaplaceFit:
    """
    Aproximación de Laplace N(x̂, H_V⁻¹) con V = n·v.

    La raíz H_V^{-1/2} se realiza con el factor de Cholesky inferior L
    (L·Lᵀ = H_V): z ↦ L⁻ᵀz lleva coordenadas blanqueadas al espacio original.
    """
    mode: np.ndarray
    hessian: np.ndarray      # H_V
    chol: np.ndarray         # L, triangular inferior
    n: float
    grad_norm: float         # ‖∇V(x̂)‖₂
    iterations: int
    lambda_min_Hv: float     # λ_min(H_V / n)

    def __post_init__(self):
        for name in ("mode", "hessian", "chol"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        d = self.mode.shape[0]
        if self.hessian.shape != (d, d) or self.chol.shape != (d, d):
            raise DimensionMismatchError("Hessiano o factor de Cholesky con forma incompatible")

    @property
    def dim(self) -> int:
        return int(self.mode.shape[0])

    def whiten(self, z) -> np.ndarray:
        """L⁻ᵀz: dirección en el espacio original correspondiente a z blanqueado."""
        vec = np.asarray(z, dtype=float)
        if vec.shape != (self.dim,):
            raise DimensionMismatchError(f"Vector de forma {vec.shape}, se esperaba ({self.dim},)")
        return solve_triangular(self.chol, vec, lower=True, trans="T")

    def whiten_batch(self, Z) -> np.ndarray:
        """L⁻ᵀzₘ para cada fila zₘ de Z."""
        rows = np.asarray(Z, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != self.dim:
            raise DimensionMismatchError(f"Lote de forma {rows.shape} incompatible con d={self.dim}")
        return solve_triangular(self.chol, rows.T, lower=True, trans="T").T

    def pull_back(self, g) -> np.ndarray:
        """L⁻¹g: gradiente en coordenadas blanqueadas (acepta vector o lote por filas)."""
        arr = np.asarray(g, dtype=float)
        if arr.ndim == 1:
            return solve_triangular(self.chol, arr, lower=True)
        return solve_triangular(self.chol, arr.T, lower=True).T

    def inverse_factor(self) -> np.ndarray:
        """L⁻¹ como matriz densa (factor de blanqueo de tensores)."""
        return solve_triangular(self.chol, np.eye(self.dim), lower=True)

    def to_record(self) -> "FitRecord":
        return FitRecord(
            d=self.dim,
            n=float(self.n),
            mode=[float(x) for x in self.mode],
            hessian_chol=[[float(x) for x in row] for row in self.chol],
            lambda_min=float(self.lambda_min_Hv),
            grad_norm=float(self.grad_norm),
            iterations=int(self.iterations),
        )


class FitRecord(BaseModel):
    """Forma persistible (JSON) de un ajuste de Laplace."""

    d: int = Field(..., ge=1, description="Dimensión del parámetro")
    n: float = Field(..., gt=0, description="Escala de tamaño muestral")
    mode: List[float] = Field(..., description="Modo x̂")
    hessian_chol: List[List[float]] = Field(..., description="Factor de Cholesky inferior de H_V")
    lambda_min: float = Field(..., description="Autovalor mínimo de H_v = H_V/n")
    grad_norm: float = Field(..., ge=0, description="‖∇V(x̂)‖₂")
    iterations: int = Field(..., ge=0, description="Iteraciones de Newton")

    def to_fit(self) -> LaplaceFit:
        chol = np.array(self.hessian_chol, dtype=float)
        return LaplaceFit(
            mode=np.array(self.mode, dtype=float),
            hessian=chol @ chol.T,
            chol=chol,
            n=self.n,
            grad_norm=self.grad_norm,
            iterations=self.iterations,
            lambda_min_Hv=self.lambda_min,
        )
