"""
Generación de datos con diseño gaussiano:

    Xᵢ ~ N(0, I_d),  Yᵢ | Xᵢ ~ Bernoulli(σ(βᵀXᵢ))
"""

import numpy as np

from .sigmoid import sigmoid
from ...domain.dataset import Dataset
from ...domain.errors import ArgumentError


def default_beta(d: int) -> np.ndarray:
    """β = e₁."""
    beta = np.zeros(d)
    beta[0] = 1.0
    return beta


def generate_dataset(d: int, n: int, beta=None, seed: int = 0) -> Dataset:
    """
    Genera n pares (Xᵢ, Yᵢ); determinista dada la semilla.

    Primero se extrae la matriz de características y luego n uniformes
    para las etiquetas, siempre del mismo generador.
    """
    if d < 1 or n < 1:
        raise ArgumentError(f"Se requieren d ≥ 1 y n ≥ 1, se recibió d={d}, n={n}")
    if seed < 0:
        raise ArgumentError(f"La semilla debe ser no negativa, se recibió {seed}")
    coefficients = default_beta(d) if beta is None else np.asarray(beta, dtype=float)
    if coefficients.shape != (d,):
        raise ArgumentError(f"β de forma {coefficients.shape}, se esperaba ({d},)")
    if not np.all(np.isfinite(coefficients)):
        raise ArgumentError("β debe tener norma finita")

    rng = np.random.default_rng(seed)
    features = rng.standard_normal((n, d))
    probabilities = sigmoid(features @ coefficients)
    labels = (rng.random(n) < probabilities).astype(np.int64)
    return Dataset(features=features, labels=labels)
