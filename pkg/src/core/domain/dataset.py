"""
Conjunto de datos de regresión logística con diseño gaussiano.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError


@dataclass(frozen=True)
class Dataset:
    """
    Pares (Xᵢ, Yᵢ) con Xᵢ ∈ R^d y Yᵢ ∈ {0, 1}.

    Los arreglos se copian y se marcan como de solo lectura.
    """
    features: np.ndarray  # n × d
    labels: np.ndarray    # n, valores 0/1

    def __post_init__(self):
        features = np.array(self.features, dtype=float)
        labels = np.array(self.labels)

        if features.ndim != 2 or features.shape[0] < 1 or features.shape[1] < 1:
            raise ArgumentError(f"Las características deben ser una matriz n×d, forma {features.shape}")
        if labels.ndim != 1 or labels.shape[0] != features.shape[0]:
            raise ArgumentError("El número de etiquetas no coincide con el número de filas")
        if not np.all(np.isfinite(features)):
            raise ArgumentError("Las características contienen valores no finitos")
        if not np.all((labels == 0) | (labels == 1)):
            raise ArgumentError("Las etiquetas deben ser binarias (0/1)")

        labels = labels.astype(np.int64)
        features.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return int(self.features.shape[0])

    @property
    def d(self) -> int:
        return int(self.features.shape[1])
