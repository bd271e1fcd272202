"""
Sigmoide logística y sus derivadas, evaluadas de forma estable.

σ' = σ(t)σ(−t) es par y σ'' = −σ'·tanh(t/2) es impar exactamente en
punto flotante, lo que anula los momentos gaussianos impares sin error
de redondeo.
"""

import numpy as np
from scipy.special import expit

from ...domain.errors import ArgumentError


def sigmoid(t):
    return expit(t)


def softplus(t):
    """log(1 + eᵗ) sin desbordamiento."""
    return np.logaddexp(0.0, t)


def sigmoid_prime(t):
    """σ'(t) = σ(t)(1 − σ(t))."""
    return expit(t) * expit(-np.asarray(t))


def sigmoid_second(t):
    """σ''(t) = σ'(t)(1 − 2σ(t)) = −σ'(t)·tanh(t/2)."""
    return -sigmoid_prime(t) * np.tanh(np.asarray(t) / 2.0)


def sigmoid_third(t):
    """σ'''(t) = σ'(t)(1 − 6σ'(t))."""
    p = sigmoid_prime(t)
    return p * (1.0 - 6.0 * p)


def sigmoid_derivative(t, order: int):
    """σ^{(order)}(t) para order ∈ {0, 1, 2, 3}."""
    if order == 0:
        return sigmoid(t)
    if order == 1:
        return sigmoid_prime(t)
    if order == 2:
        return sigmoid_second(t)
    if order == 3:
        return sigmoid_third(t)
    raise ArgumentError(f"Derivada de orden {order} no soportada")
