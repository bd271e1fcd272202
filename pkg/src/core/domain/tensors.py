"""
Tensores simétricos densos de orden 3 y 4.

Se almacenan en forma completa (d³ o d⁴ entradas); la semántica de todas
las operaciones está definida sobre el tensor simétrico completo.
"""

from itertools import permutations
from typing import Mapping, Tuple

import numpy as np

from .errors import ArgumentError, DimensionMismatchError

# Filas procesadas por bloque en las contracciones por lotes
_BATCH_BLOCK = 512

SYMMETRY_RTOL = 1e-12


def _validated_array(entries, order: int) -> np.ndarray:
    arr = np.array(entries, dtype=float)
    if arr.ndim != order or len(set(arr.shape)) != 1 or arr.shape[0] < 1:
        raise ArgumentError(
            f"Se esperaba un arreglo cúbico de orden {order}, se recibió forma {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise ArgumentError("El tensor contiene entradas no finitas")
    return arr


def _check_symmetric(arr: np.ndarray) -> None:
    scale = max(1.0, float(np.max(np.abs(arr))))
    axes = tuple(range(arr.ndim))
    for perm in permutations(axes):
        if perm == axes:
            continue
        if np.max(np.abs(arr - np.transpose(arr, perm))) > SYMMETRY_RTOL * scale:
            raise ArgumentError("El tensor no es simétrico bajo permutación de índices")


def _symmetrized(arr: np.ndarray) -> np.ndarray:
    axes = tuple(range(arr.ndim))
    perms = list(permutations(axes))
    total = np.zeros_like(arr)
    for perm in perms:
        total += np.transpose(arr, perm)
    return total / len(perms)


def _filled(dim: int, order: int, generators: Mapping[Tuple[int, ...], float]) -> np.ndarray:
    arr = np.zeros((dim,) * order)
    for index, value in generators.items():
        if len(index) != order or any(i < 0 or i >= dim for i in index):
            raise ArgumentError(f"Índice {index} inválido para dimensión {dim}")
        for perm in set(permutations(index)):
            arr[perm] = value
    return arr


def _check_vector(u, dim: int) -> np.ndarray:
    vec = np.asarray(u, dtype=float)
    if vec.ndim != 1 or vec.shape[0] != dim:
        raise DimensionMismatchError(
            f"El vector tiene forma {vec.shape}, se esperaba ({dim},)"
        )
    return vec


class SymTensor3:
    """
    Tensor simétrico de orden 3.

    Inmutable tras la construcción: el arreglo interno se marca como
    de solo lectura.
    """

    order = 3

    def __init__(self, entries, check_symmetry: bool = True):
        arr = _validated_array(entries, self.order)
        if check_symmetry:
            _check_symmetric(arr)
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def zeros(cls, dim: int) -> "SymTensor3":
        return cls(np.zeros((dim,) * cls.order), check_symmetry=False)

    @classmethod
    def from_entries(cls, dim: int, generators: Mapping[Tuple[int, ...], float]) -> "SymTensor3":
        """
        Construye el tensor a partir de generadores de órbitas.

        Args:
            dim: Dimensión d
            generators: Diccionario {(i, j, k): valor} con índices desde 0;
                el valor se copia a todas las permutaciones del índice.
        """
        return cls(_filled(dim, cls.order, generators), check_symmetry=False)

    @classmethod
    def symmetrize(cls, array) -> "SymTensor3":
        """Promedia un arreglo arbitrario sobre todas las permutaciones de índices."""
        arr = _validated_array(array, cls.order)
        return cls(_symmetrized(arr), check_symmetry=False)

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def contract(self, u) -> float:
        """⟨S, u⊗3⟩."""
        vec = _check_vector(u, self.dim)
        return float(self._entries @ vec @ vec @ vec)

    def vector_contract(self, u) -> np.ndarray:
        """S(u, u, ·): gradiente de ⟨S, u⊗3⟩ dividido entre 3."""
        vec = _check_vector(u, self.dim)
        return self._entries @ vec @ vec

    def matrix_contract(self, u) -> np.ndarray:
        """S(u, ·, ·)."""
        vec = _check_vector(u, self.dim)
        return self._entries @ vec

    def contract_matrix(self, A) -> np.ndarray:
        """Vector con coordenadas Σⱼₖ Sᵢⱼₖ Aⱼₖ."""
        mat = np.asarray(A, dtype=float)
        if mat.shape != (self.dim, self.dim):
            raise DimensionMismatchError(
                f"La matriz tiene forma {mat.shape}, se esperaba ({self.dim}, {self.dim})"
            )
        return np.tensordot(self._entries, mat, axes=([1, 2], [0, 1]))

    def identity_contraction(self) -> np.ndarray:
        """⟨S, I⟩ = Σⱼ Sᵢⱼⱼ."""
        return np.einsum("ijj->i", self._entries)

    def frobenius(self) -> float:
        return float(np.sqrt(np.sum(self._entries ** 2)))

    def whiten(self, M) -> "SymTensor3":
        """
        Producto modal en los tres índices: T[a,b,c] = Σ M[a,i] M[b,j] M[c,k] S[i,j,k].

        Con M = L⁻¹ (L factor de Cholesky de H) el resultado es el tensor
        blanqueado cuya norma de operador esférica es ‖S‖_H.
        """
        mat = np.asarray(M, dtype=float)
        if mat.ndim != 2 or mat.shape[1] != self.dim:
            raise DimensionMismatchError(f"Factor de forma {mat.shape} incompatible con d={self.dim}")
        out = np.einsum("ai,bj,ck,ijk->abc", mat, mat, mat, self._entries, optimize=True)
        return SymTensor3.symmetrize(out)

    def scaled(self, factor: float) -> "SymTensor3":
        return SymTensor3(self._entries * factor, check_symmetry=False)

    def contract_batch(self, U) -> np.ndarray:
        """⟨S, uₘ⊗3⟩ para cada fila uₘ de U."""
        rows = np.asarray(U, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != self.dim:
            raise DimensionMismatchError(f"Lote de forma {rows.shape} incompatible con d={self.dim}")
        d = self.dim
        flat = self._entries.reshape(d, d * d)
        out = np.empty(rows.shape[0])
        for start in range(0, rows.shape[0], _BATCH_BLOCK):
            block = rows[start:start + _BATCH_BLOCK]
            partial = (block @ flat).reshape(-1, d, d)
            out[start:start + _BATCH_BLOCK] = np.einsum("mjk,mj,mk->m", partial, block, block)
        return out

    def is_zero(self) -> bool:
        return not np.any(self._entries)

    def __repr__(self) -> str:
        return f"SymTensor3(dim={self.dim}, frobenius={self.frobenius():.6g})"


class SymTensor4:
    """Tensor simétrico de orden 4."""

    order = 4

    def __init__(self, entries, check_symmetry: bool = True):
        arr = _validated_array(entries, self.order)
        if check_symmetry:
            _check_symmetric(arr)
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def zeros(cls, dim: int) -> "SymTensor4":
        return cls(np.zeros((dim,) * cls.order), check_symmetry=False)

    @classmethod
    def from_entries(cls, dim: int, generators: Mapping[Tuple[int, ...], float]) -> "SymTensor4":
        return cls(_filled(dim, cls.order, generators), check_symmetry=False)

    @classmethod
    def symmetrize(cls, array) -> "SymTensor4":
        arr = _validated_array(array, cls.order)
        return cls(_symmetrized(arr), check_symmetry=False)

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def contract(self, u) -> float:
        """⟨T, u⊗4⟩."""
        vec = _check_vector(u, self.dim)
        return float(self._entries @ vec @ vec @ vec @ vec)

    def vector_contract(self, u) -> np.ndarray:
        """T(u, u, u, ·)."""
        vec = _check_vector(u, self.dim)
        return self._entries @ vec @ vec @ vec

    def matrix_contract(self, u) -> np.ndarray:
        """T(u, u, ·, ·)."""
        vec = _check_vector(u, self.dim)
        return self._entries @ vec @ vec

    def tensor_contract(self, x) -> SymTensor3:
        """T(x, ·, ·, ·) como tensor de orden 3."""
        vec = _check_vector(x, self.dim)
        return SymTensor3(self._entries @ vec, check_symmetry=False)

    def frobenius(self) -> float:
        return float(np.sqrt(np.sum(self._entries ** 2)))

    def whiten(self, M) -> "SymTensor4":
        mat = np.asarray(M, dtype=float)
        if mat.ndim != 2 or mat.shape[1] != self.dim:
            raise DimensionMismatchError(f"Factor de forma {mat.shape} incompatible con d={self.dim}")
        out = np.einsum(
            "ai,bj,ck,dl,ijkl->abcd", mat, mat, mat, mat, self._entries, optimize=True
        )
        return SymTensor4.symmetrize(out)

    def scaled(self, factor: float) -> "SymTensor4":
        return SymTensor4(self._entries * factor, check_symmetry=False)

    def contract_batch(self, U) -> np.ndarray:
        rows = np.asarray(U, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != self.dim:
            raise DimensionMismatchError(f"Lote de forma {rows.shape} incompatible con d={self.dim}")
        d = self.dim
        flat = self._entries.reshape(d, d ** 3)
        out = np.empty(rows.shape[0])
        for start in range(0, rows.shape[0], _BATCH_BLOCK):
            block = rows[start:start + _BATCH_BLOCK]
            partial = (block @ flat).reshape(-1, d, d, d)
            out[start:start + _BATCH_BLOCK] = np.einsum(
                "mjkl,mj,mk,ml->m", partial, block, block, block
            )
        return out

    def is_zero(self) -> bool:
        return not np.any(self._entries)

    def __repr__(self) -> str:
        return f"SymTensor4(dim={self.dim}, frobenius={self.frobenius():.6g})"
