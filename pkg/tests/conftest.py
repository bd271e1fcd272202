"""
Fixtures compartidas de la suite.
"""

import numpy as np
import pytest

from core.domain.tensors import SymTensor3, SymTensor4
from core.solvers.models import generate_dataset


def random_tensor3(dim: int, rng: np.random.Generator) -> SymTensor3:
    return SymTensor3.symmetrize(rng.standard_normal((dim, dim, dim)))


def isotropic_tensor4(dim: int, c: float = 1.0) -> SymTensor4:
    """T con ⟨T, u⊗4⟩ = c‖u‖⁴ (definido positivo en la esfera)."""
    eye = np.eye(dim)
    entries = (
        np.einsum("ij,kl->ijkl", eye, eye)
        + np.einsum("ik,jl->ijkl", eye, eye)
        + np.einsum("il,jk->ijkl", eye, eye)
    ) * (c / 3.0)
    return SymTensor4(entries)


def random_spd(dim: int, rng: np.random.Generator) -> np.ndarray:
    A = rng.standard_normal((dim, dim))
    return A @ A.T + dim * np.eye(dim)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def small_dataset():
    return generate_dataset(3, 50, seed=3)


@pytest.fixture
def separable_dataset():
    from core.domain.dataset import Dataset
    features = np.array([[1.0, 0.5], [2.0, -0.5], [-1.0, -0.5], [-2.0, 0.5]])
    return Dataset(features=features, labels=np.array([1, 1, 0, 0]))


@pytest.fixture
def make_tensor3():
    return random_tensor3


@pytest.fixture
def make_tensor4():
    return isotropic_tensor4


@pytest.fixture
def make_spd():
    return random_spd
