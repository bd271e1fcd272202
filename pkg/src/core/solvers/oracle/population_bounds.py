"""
Término principal exacto del posterior poblacional y su cota inferior.

En b = β el Hessiano es H_V = n·diag(a₁,₂, a₁,₀, ..., a₁,₀), de modo que
⟨∇³W(0), Z⊗3⟩ = n^{−1/2}·Z₁·(αZ₁² + βQ) con

    α = a₂,₃·a₁,₂^{−3/2},   β = 3a₂,₁/(a₁,₂^{1/2}·a₁,₀),   Q = ‖Z₂:d‖² ~ χ²_{d−1}

La esperanza en Z₁ tiene forma cerrada; la de Q se integra con
Gauss–Laguerre generalizada.
"""

import logging
import math

import numpy as np
from scipy.special import roots_genlaguerre

from ...domain.errors import ArgumentError
from ...domain.report import GaussianMoments

logger = logging.getLogger(__name__)

LEADING_TERM_FACTOR = 1.0 / 12.0
DEFAULT_LAGUERRE_ORDER = 256
MAX_LAGUERRE_ORDER = 2048
RELATIVE_TOLERANCE = 1e-8

_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def lemma31_lower_bound(moments: GaussianMoments, d: int, n: float) -> float:
    """
    (1/12)·(2/(a₁,₂^{1/2}√n))·((d−1)|a₂,₁|/a₁,₀ − 2|a₂,₃|/a₁,₂).

    Puede ser negativa para d pequeño (cota vacía); se devuelve tal cual.
    """
    if d < 2 or n < 1:
        raise ArgumentError(f"Se requieren d ≥ 2 y n ≥ 1, se recibió d={d}, n={n}")
    a10, a12 = moments.moment(1, 0), moments.moment(1, 2)
    a21, a23 = moments.moment(2, 1), moments.moment(2, 3)
    bracket = (d - 1) * abs(a21) / a10 - 2.0 * abs(a23) / a12
    return LEADING_TERM_FACTOR * 2.0 / (math.sqrt(a12) * math.sqrt(n)) * bracket


def _abs_cubic_moment(alpha: float, c: np.ndarray) -> np.ndarray:
    """E[|Z|·|αZ² + c|] para Z ~ N(0, 1), vectorizado en c."""
    c = np.asarray(c, dtype=float)
    same_sign = alpha * c >= 0.0
    out = _SQRT_2_OVER_PI * (2.0 * abs(alpha) + np.abs(c))
    if alpha != 0.0 and np.any(~same_sign):
        z0_sq = np.abs(c[~same_sign]) / abs(alpha)
        out[~same_sign] = abs(alpha) * _SQRT_2_OVER_PI * (z0_sq - 2.0 + 4.0 * np.exp(-0.5 * z0_sq))
    return out


def _chi_square_expectation(alpha: float, beta: float, dof: int, order: int) -> float:
    # Q = 2t con t ~ Gamma(dof/2): pesos de Laguerre generalizada normalizados
    nodes, weights = roots_genlaguerre(order, dof / 2.0 - 1.0)
    weights = weights / weights.sum()
    return float(weights @ _abs_cubic_moment(alpha, beta * 2.0 * nodes))


def population_L_exact(
    moments: GaussianMoments, d: int, n: float, quadrature_order: int = DEFAULT_LAGUERRE_ORDER
) -> float:
    """
    L = (1/12)·n^{−1/2}·E[|Z₁|·|αZ₁² + βQ|] en b = β.

    El orden de Laguerre se duplica hasta que el cambio relativo sea ≤ 1e-8.
    Para d = 1 no hay parte χ² y L = (1/12)·n^{−1/2}·|α|·E|Z|³.
    """
    if d < 1 or n <= 0:
        raise ArgumentError(f"Se requieren d ≥ 1 y n > 0, se recibió d={d}, n={n}")
    if quadrature_order < 1:
        raise ArgumentError("El orden de cuadratura debe ser positivo")
    a10, a12 = moments.moment(1, 0), moments.moment(1, 2)
    a21, a23 = moments.moment(2, 1), moments.moment(2, 3)
    alpha = a23 * a12 ** -1.5
    beta = 3.0 * a21 / (math.sqrt(a12) * a10)
    prefactor = LEADING_TERM_FACTOR / math.sqrt(n)

    if d == 1:
        return prefactor * abs(alpha) * 2.0 * _SQRT_2_OVER_PI

    order = quadrature_order
    value = _chi_square_expectation(alpha, beta, d - 1, order)
    while order < MAX_LAGUERRE_ORDER:
        order *= 2
        refined = _chi_square_expectation(alpha, beta, d - 1, order)
        change = abs(refined - value) / max(abs(refined), 1e-300)
        value = refined
        if change <= RELATIVE_TOLERANCE:
            break
    else:
        logger.warning("Gauss–Laguerre sin estabilizar en orden %d", order)
    return prefactor * value
