"""
Verificación numérica de dos cotas de colas usadas en los restos.

- Cola gamma:  ∫_λ^∞ t^{c−1}e^{−t} dt ≤ e^{c−λ}λ^c,  λ > c > 0
- Cola polar:  (2π)^{−d/2}∫_{‖x‖≥a√d} ‖x‖^p e^{−b√d‖x‖} dx
               ≤ (ea)^p·exp((p/2 + 1)log d + (3/2 + log a − ab)d),  abd > p + d

Ambas se calculan en escala logarítmica.
"""

import math
from typing import Tuple

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaincc, gammaln

from ...domain.errors import ArgumentError


def gamma_tail_check(lam: float, c: float) -> Tuple[float, float]:
    """(exacto, cota) con exacto = Γ(c)·Q(c, λ)."""
    if not (lam > c > 0):
        raise ArgumentError(f"Se requiere λ > c > 0, se recibió λ={lam}, c={c}")
    with np.errstate(divide="ignore"):
        log_exact = float(gammaln(c) + np.log(gammaincc(c, lam)))
    log_bound = c - lam + c * math.log(lam)
    return math.exp(log_exact), math.exp(log_bound)


def polar_tail_check(a: float, b: float, p: float, d: int) -> Tuple[float, float]:
    """
    (integral numérica, cota).

    En coordenadas polares la integral es S_{d−1}·∫_{a√d}^∞ r^{p+d−1}e^{−b√d r} dr;
    con r = a√d + t se factoriza e^{−abd} y el integrando restante es
    (1 + t/(a√d))^{p+d−1}e^{−b√d t} ≤ 1.
    """
    if a <= 0 or b <= 0 or p < 0 or d < 1:
        raise ArgumentError("Se requieren a, b > 0, p ≥ 0 y d ≥ 1")
    if a * b * d <= p + d:
        raise ArgumentError(f"Hipótesis abd > p + d violada: abd={a * b * d:.6g}, p + d={p + d:.6g}")

    sqrt_d = math.sqrt(d)
    u0 = a * sqrt_d
    power = p + d - 1
    log_surface = math.log(2.0) + 0.5 * d * math.log(math.pi) - gammaln(d / 2.0)

    integral, _ = quad(lambda t: (1.0 + t / u0) ** power * math.exp(-b * sqrt_d * t), 0.0, np.inf, limit=200)
    log_numeric = (
        -0.5 * d * math.log(2.0 * math.pi)
        + log_surface
        + power * math.log(u0)
        - a * b * d
        + math.log(integral)
    )
    log_bound = p * (1.0 + math.log(a)) + (p / 2.0 + 1.0) * math.log(d) + (1.5 + math.log(a) - a * b) * d
    return math.exp(log_numeric), math.exp(log_bound)
