"""
Identidades de tensores de Hermite de orden 3.

𝐇₃(x) = x⊗3 − 3·Sym(x ⊗ I), de modo que
⟨S, x⊗3⟩ = ⟨S, 𝐇₃(x)⟩ + 3⟨S, I⟩ᵀx, y para Z ~ N(0, I):

    E[⟨S, 𝐇₃(Z)⟩²] = 3!·‖S‖_F²
    E[⟨S, Z⊗3⟩²]   = 3!·‖S‖_F² + 9·‖⟨S, I⟩‖²
"""

import math
from typing import Callable, Tuple

import numpy as np
from scipy.special import logsumexp

from ..monte_carlo import STREAM_HERMITE, chunk_sizes, derive_rng, gaussian_expectation, parallel_map
from ...domain.errors import ArgumentError, DimensionMismatchError
from ...domain.tensors import SymTensor3

# A partir de esta potencia se acumula en escala logarítmica
LOG_POWER_THRESHOLD = 8
MIN_SAMPLES = 100


def hermite3_apply(S: SymTensor3, x) -> float:
    """⟨S, 𝐇₃(x)⟩ = ⟨S, x⊗3⟩ − 3⟨⟨S, I⟩, x⟩."""
    vec = np.asarray(x, dtype=float)
    if vec.shape != (S.dim,):
        raise DimensionMismatchError(f"Vector de forma {vec.shape}, se esperaba ({S.dim},)")
    return S.contract(vec) - 3.0 * float(S.identity_contraction() @ vec)


def hermite3_apply_batch(S: SymTensor3, X) -> np.ndarray:
    """`hermite3_apply` para cada fila de X."""
    rows = np.asarray(X, dtype=float)
    return S.contract_batch(rows) - 3.0 * (rows @ S.identity_contraction())


def cubic_second_moment(S: SymTensor3) -> float:
    """E[⟨S, Z⊗3⟩²] = 6‖S‖_F² + 9‖⟨S, I⟩‖²."""
    trace = S.identity_contraction()
    return 6.0 * S.frobenius() ** 2 + 9.0 * float(trace @ trace)


def hypercontractive_moment_bound(S: SymTensor3, k: int) -> float:
    """(2k−1)^{3/2}(√6‖S‖_F + 3‖⟨S, I⟩‖): cota de (E⟨S, Z⊗3⟩^{2k})^{1/2k}."""
    _check_power(k)
    trace_norm = float(np.linalg.norm(S.identity_contraction()))
    return (2 * k - 1) ** 1.5 * (math.sqrt(6.0) * S.frobenius() + 3.0 * trace_norm)


def operator_moment_bound(S: SymTensor3, k: int, opnorm: float) -> float:
    """6(2k−1)^{3/2}·d·‖S‖, la cota en términos de la norma de operador."""
    _check_power(k)
    return 6.0 * (2 * k - 1) ** 1.5 * S.dim * opnorm


def _check_power(k: int) -> None:
    if k < 1:
        raise ArgumentError(f"k debe ser un entero positivo, se recibió {k}")


def _power_moment(
    values_fn: Callable[[np.ndarray], np.ndarray],
    dim: int,
    k: int,
    samples: int,
    seed: int,
    stream: int,
    workers: int,
) -> Tuple[float, float]:
    """
    E[Y^{2k}] por Monte Carlo, con Y = values_fn(Z).

    Para 2k ≥ 8 las sumas de |Y|^{2k} y |Y|^{4k} se acumulan como
    log-sum-exp por bloque y se combinan con logaddexp.
    """
    _check_power(k)
    if samples < MIN_SAMPLES:
        raise ArgumentError(f"Se requieren al menos {MIN_SAMPLES} muestras")
    power = 2 * k

    if power < LOG_POWER_THRESHOLD:
        result = gaussian_expectation(
            lambda Z: values_fn(Z) ** power, dim, samples, seed,
            stream=(stream, power), workers=workers,
        )
        return result.estimate, result.stderr

    sizes = chunk_sizes(samples)

    def run_chunk(index: int) -> Tuple[float, float]:
        rng = derive_rng(seed, stream, power, index)
        Z = rng.standard_normal((sizes[index], dim))
        with np.errstate(divide="ignore"):
            log_abs = np.log(np.abs(values_fn(Z)))
        if np.all(np.isneginf(log_abs)):
            return -np.inf, -np.inf
        return float(logsumexp(power * log_abs)), float(logsumexp(2 * power * log_abs))

    log_first, log_second = -np.inf, -np.inf
    for first, second in parallel_map(run_chunk, list(range(len(sizes))), workers):
        log_first = np.logaddexp(log_first, first)
        log_second = np.logaddexp(log_second, second)

    if np.isneginf(log_first):
        return 0.0, 0.0

    log_k = math.log(samples)
    log_mean = log_first - log_k
    log_mean_sq = log_second - log_k
    # var = E[Y²ᵖ] − E[Yᵖ]², en escala logarítmica
    gap = 2.0 * log_mean - log_mean_sq
    if gap >= 0.0:
        return float(math.exp(log_mean)), 0.0
    log_var = log_mean_sq + math.log1p(-math.exp(gap))
    log_stderr = 0.5 * (log_var - math.log(samples - 1))
    return float(math.exp(log_mean)), float(math.exp(log_stderr))


def mc_cubic_moment(
    S: SymTensor3, k: int, samples: int, seed: int = 0, workers: int = 1
) -> Tuple[float, float]:
    """
    Estimación Monte Carlo de E[⟨S, Z⊗3⟩^{2k}] con su error estándar.

    Determinista dada (seed, samples); no depende de `workers`.
    """
    if S.is_zero():
        return 0.0, 0.0
    return _power_moment(S.contract_batch, S.dim, k, samples, seed, STREAM_HERMITE, workers)


def mc_hermite_moment(
    S: SymTensor3, k: int, samples: int, seed: int = 0, workers: int = 1
) -> Tuple[float, float]:
    """Estimación Monte Carlo de E[⟨S, 𝐇₃(Z)⟩^{2k}] con su error estándar."""
    if S.is_zero():
        return 0.0, 0.0
    return _power_moment(
        lambda Z: hermite3_apply_batch(S, Z), S.dim, k, samples, seed, STREAM_HERMITE + 1, workers
    )
