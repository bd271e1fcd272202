"""
Contracciones y normas de tensores simétricos.

Interfaz funcional sobre los métodos de SymTensor3 / SymTensor4 que
valida dimensiones y simetría de los operandos.
"""

import numpy as np

from ...domain.errors import ArgumentError, DimensionMismatchError
from ...domain.tensors import SymTensor3, SymTensor4

MATRIX_SYMMETRY_RTOL = 1e-10


def _vector(u, dim: int) -> np.ndarray:
    vec = np.asarray(u, dtype=float)
    if vec.shape != (dim,):
        raise DimensionMismatchError(f"Vector de forma {vec.shape}, se esperaba ({dim},)")
    return vec


def symmetric_matrix(A, dim: int) -> np.ndarray:
    """Valida que A sea una matriz d×d simétrica (tolerancia relativa 1e-10)."""
    mat = np.asarray(A, dtype=float)
    if mat.shape != (dim, dim):
        raise DimensionMismatchError(f"Matriz de forma {mat.shape}, se esperaba ({dim}, {dim})")
    scale = max(1.0, float(np.max(np.abs(mat))))
    if np.max(np.abs(mat - mat.T)) > MATRIX_SYMMETRY_RTOL * scale:
        raise ArgumentError("La matriz no es simétrica")
    return mat


def contract3(S: SymTensor3, u) -> float:
    """⟨S, u⊗3⟩ = Σᵢⱼₖ Sᵢⱼₖ uᵢuⱼuₖ."""
    return S.contract(_vector(u, S.dim))


def contract_matrix(S: SymTensor3, A) -> np.ndarray:
    """⟨S, A⟩ con coordenadas vᵢ = Σⱼₖ Sᵢⱼₖ Aⱼₖ; A debe ser simétrica."""
    return S.contract_matrix(symmetric_matrix(A, S.dim))


def frobenius(S: SymTensor3) -> float:
    """Norma de Frobenius sobre el tensor completo (multiplicidades incluidas)."""
    return S.frobenius()


def contract4(T: SymTensor4, u) -> float:
    """⟨T, u⊗4⟩."""
    return T.contract(_vector(u, T.dim))


def frobenius4(T: SymTensor4) -> float:
    return T.frobenius()
