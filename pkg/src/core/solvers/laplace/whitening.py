"""
Potencial blanqueado y restos de Taylor.

    W(z) = V(x̂ + L⁻ᵀz),   H_V = L·Lᵀ
    r₃(z) = W(z) − W(0) − ‖z‖²/2
    r₄(z) = r₃(z) − (1/3!)·⟨∇³W(0), z⊗3⟩

con ⟨∇³W(0), z⊗3⟩ = n·⟨∇³v(x̂), (L⁻ᵀz)⊗3⟩ y ∇W(z) = L⁻¹·∇V(x̂ + L⁻ᵀz).
"""

from typing import Optional

import numpy as np

from ..models.base_model import ModelCapabilities
from ...domain.errors import DimensionMismatchError
from ...domain.fit import LaplaceFit
from ...domain.tensors import SymTensor3, SymTensor4


def _check(fitted: LaplaceFit, model: ModelCapabilities) -> None:
    if fitted.dim != model.dim:
        raise DimensionMismatchError(f"Ajuste de dimensión {fitted.dim} con modelo de dimensión {model.dim}")


def whitened_point(fitted: LaplaceFit, z) -> np.ndarray:
    """x̂ + L⁻ᵀz."""
    return fitted.mode + fitted.whiten(z)


def whitened_potential(fitted: LaplaceFit, model: ModelCapabilities, z) -> float:
    """W(z) = n·v(x̂ + L⁻ᵀz); W(0) = V(x̂)."""
    _check(fitted, model)
    return model.n * model.v(whitened_point(fitted, z))


def whitened_potential_batch(fitted: LaplaceFit, model: ModelCapabilities, Z) -> np.ndarray:
    _check(fitted, model)
    return model.n * model.v_batch(fitted.mode + fitted.whiten_batch(Z))


def whitened_gradient(fitted: LaplaceFit, model: ModelCapabilities, z) -> np.ndarray:
    """∇W(z) = L⁻¹·n·∇v(x̂ + L⁻ᵀz)."""
    _check(fitted, model)
    return fitted.pull_back(model.n * model.grad_v(whitened_point(fitted, z)))


def whitened_gradient_batch(fitted: LaplaceFit, model: ModelCapabilities, Z) -> np.ndarray:
    _check(fitted, model)
    points = fitted.mode + fitted.whiten_batch(Z)
    return fitted.pull_back(model.n * model.grad_v_batch(points))


def whitened_third_contract(fitted: LaplaceFit, model: ModelCapabilities, z) -> float:
    """⟨∇³W(0), z⊗3⟩."""
    _check(fitted, model)
    return model.n * model.third_contract_v(fitted.mode, fitted.whiten(z))


def whitened_third_contract_batch(fitted: LaplaceFit, model: ModelCapabilities, Z) -> np.ndarray:
    """⟨∇³W(0), zₘ⊗3⟩ para cada fila zₘ de Z."""
    _check(fitted, model)
    return model.n * model.third_contract_v_batch(fitted.mode, fitted.whiten_batch(Z))


def whitened_third_tensor(fitted: LaplaceFit, model: ModelCapabilities) -> Optional[SymTensor3]:
    """∇³W(0) denso, si el modelo ofrece ∇³v."""
    _check(fitted, model)
    tensor = model.third_tensor_v(fitted.mode)
    if tensor is None:
        return None
    return tensor.scaled(model.n).whiten(fitted.inverse_factor())


def whitened_fourth_tensor(fitted: LaplaceFit, model: ModelCapabilities, z=None) -> Optional[SymTensor4]:
    """∇⁴W(z) denso, si el modelo ofrece ∇⁴v."""
    _check(fitted, model)
    point = fitted.mode if z is None else whitened_point(fitted, z)
    tensor = model.fourth_tensor_v(point)
    if tensor is None:
        return None
    return tensor.scaled(model.n).whiten(fitted.inverse_factor())


def r3(fitted: LaplaceFit, model: ModelCapabilities, z) -> float:
    vec = np.asarray(z, dtype=float)
    w0 = whitened_potential(fitted, model, np.zeros(fitted.dim))
    return whitened_potential(fitted, model, vec) - w0 - 0.5 * float(vec @ vec)


def r4(fitted: LaplaceFit, model: ModelCapabilities, z) -> float:
    return r3(fitted, model, z) - whitened_third_contract(fitted, model, z) / 6.0


def r3_batch(fitted: LaplaceFit, model: ModelCapabilities, Z) -> np.ndarray:
    rows = np.asarray(Z, dtype=float)
    w0 = whitened_potential(fitted, model, np.zeros(fitted.dim))
    return whitened_potential_batch(fitted, model, rows) - w0 - 0.5 * np.einsum("ij,ij->i", rows, rows)
