"""
Momentos gaussianos de las derivadas de la sigmoide.

    m_{k,p}(ρ) = E[σ^{(k)}(ρZ)·Zᵖ],  Z ~ N(0, 1)

con a_{k,p} = m_{k,p}(1). Se usa la regla de Gauss–Hermite probabilista
(peso e^{−z²/2}) plegada sobre ±z: cada par de nodos simétricos se suma
antes de ponderar, de modo que los momentos de integrando impar salen
exactamente cero.
"""

import math
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial.hermite_e import hermegauss

from .sigmoid import sigmoid_derivative, softplus
from ...domain.errors import ArgumentError
from ...domain.report import GaussianMoments

DEFAULT_QUADRATURE_ORDER = 128
MIN_QUADRATURE_ORDER = 32
MAX_POWER = 4


@lru_cache(maxsize=8)
def folded_hermite_rule(order: int) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Nodos positivos, pesos de cada par (±z) y peso del nodo central.

    Los pesos están normalizados por √(2π) para que integren la
    densidad normal estándar.
    """
    nodes, weights = hermegauss(order)
    weights = weights / math.sqrt(2.0 * math.pi)
    # Los nodos vienen ordenados y son simétricos; con orden impar el central es z = 0
    half = order // 2
    center = float(weights[half]) if order % 2 else 0.0
    pos_nodes = np.abs(nodes[:half][::-1]).copy()
    pos_weights = weights[:half][::-1].copy()
    pos_nodes.setflags(write=False)
    pos_weights.setflags(write=False)
    return pos_nodes, pos_weights, center


def folded_expectation(
    fn: Callable[[np.ndarray], np.ndarray], order: int = DEFAULT_QUADRATURE_ORDER
) -> float:
    """E[f(Z)] por Gauss–Hermite, sumando f(z) + f(−z) en cada par de nodos."""
    nodes, weights, center = folded_hermite_rule(order)
    paired = fn(nodes) + fn(-nodes)
    total = float(weights @ paired)
    if center:
        total += center * float(fn(np.zeros(1))[0])
    return total


def sigmoid_moment_table(rho: float, order: int = DEFAULT_QUADRATURE_ORDER) -> np.ndarray:
    """
    Tabla 3×5 con m_{k,p}(ρ) en la fila k−1 y la columna p.

    Para ρ = 0 se reduce a σ^{(k)}(0)·E[Zᵖ].
    """
    nodes, weights, center = folded_hermite_rule(order)
    table = np.zeros((3, MAX_POWER + 1))
    for k in (1, 2, 3):
        plus = sigmoid_derivative(rho * nodes, k)
        minus = sigmoid_derivative(-rho * nodes, k)
        at_zero = float(sigmoid_derivative(0.0, k))
        for p in range(MAX_POWER + 1):
            sign = 1.0 if p % 2 == 0 else -1.0
            paired = nodes ** p * (plus + sign * minus)
            value = float(weights @ paired)
            if center and p == 0:
                value += center * at_zero
            table[k - 1, p] = value
    return table


def softplus_expectation(rho: float, order: int = DEFAULT_QUADRATURE_ORDER) -> float:
    """E[log(1 + e^{ρZ})]."""
    return folded_expectation(lambda z: softplus(rho * z), order)


def gaussian_sigmoid_moments(quadrature_order: int = DEFAULT_QUADRATURE_ORDER) -> GaussianMoments:
    """
    a_{k,p} = E[σ^{(k)}(Z)Zᵖ] para k ∈ {1, 2, 3}, p ∈ {0, ..., 4}.

    Por paridad, a₁,₁ = a₁,₃ = 0 y a₂,₀ = a₂,₂ = a₂,₄ = 0 exactamente.

    Raises:
        ArgumentError: si el orden de cuadratura es menor que 32
    """
    if quadrature_order < MIN_QUADRATURE_ORDER:
        raise ArgumentError(
            f"El orden de cuadratura debe ser al menos {MIN_QUADRATURE_ORDER}, se recibió {quadrature_order}"
        )
    table = sigmoid_moment_table(1.0, quadrature_order)
    return GaussianMoments(
        a=[[float(x) for x in row] for row in table],
        quadrature_order=quadrature_order,
    )
