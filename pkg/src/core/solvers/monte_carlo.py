"""
Utilidades de Monte Carlo reproducible.

Cada bloque de muestras usa un generador derivado de (semilla, flujo, bloque)
mediante `numpy.random.SeedSequence`, de modo que el resultado no depende
del número de hilos ni del orden de ejecución. Las estadísticas por bloque
se combinan siempre en el orden de los bloques.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, TypeVar

import numpy as np

from ..domain.errors import ArgumentError
from ..domain.solver_result import MonteCarloEstimate

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_CHUNK_SIZE = 4096

# Identificadores de flujo para que cada estimador use números aleatorios independientes
STREAM_LEADING_TERM = 1
STREAM_LSI = 2
STREAM_C3_STARTS = 3
STREAM_C4_PROBES = 4
STREAM_C4_STARTS = 5
STREAM_HERMITE = 6


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    """Generador determinista para la semilla y la ruta de claves dadas."""
    if seed < 0:
        raise ArgumentError(f"La semilla debe ser no negativa, se recibió {seed}")
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=tuple(keys)))


def chunk_sizes(total: int, chunk_size: int = DEFAULT_CHUNK_SIZE) -> List[int]:
    """Tamaños de bloque fijos (el último puede ser menor)."""
    full, rest = divmod(total, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Aplica `fn` a cada elemento preservando el orden de entrada.

    Con workers > 1 se usa un pool de hilos; numpy libera el GIL en las
    operaciones vectorizadas que dominan el costo.
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class ChunkStatistics:
    """Conteo, media y suma de cuadrados centrada de un bloque."""
    count: int
    mean: float
    m2: float

    @classmethod
    def of(cls, values: np.ndarray) -> "ChunkStatistics":
        count = int(values.shape[0])
        mean = float(np.mean(values))
        m2 = float(np.sum((values - mean) ** 2))
        return cls(count, mean, m2)

    def merge(self, other: "ChunkStatistics") -> "ChunkStatistics":
        # Combinación por pares de Chan et al.
        count = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * other.count / count
        m2 = self.m2 + other.m2 + delta * delta * self.count * other.count / count
        return ChunkStatistics(count, mean, m2)

    @property
    def stderr(self) -> float:
        if self.count < 2:
            return 0.0
        return math.sqrt(max(self.m2, 0.0) / (self.count - 1) / self.count)


def gaussian_expectation(
    sample_fn: Callable[[np.ndarray], np.ndarray],
    dim: int,
    samples: int,
    seed: int,
    stream: Tuple[int, ...] = (),
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> MonteCarloEstimate:
    """
    Estima E[f(Z)] con Z ~ N(0, I_d).

    Args:
        sample_fn: Función vectorizada: matriz (m, d) de muestras -> valores (m,)
        dim: Dimensión d
        samples: Número total de muestras K
        seed: Semilla base
        stream: Claves adicionales que identifican al estimador
        workers: Hilos para evaluar bloques en paralelo
        chunk_size: Tamaño de bloque (forma parte de la definición del flujo aleatorio)

    Returns:
        MonteCarloEstimate con media y error estándar
    """
    if samples < 1:
        raise ArgumentError("Se requiere al menos una muestra")
    sizes = chunk_sizes(samples, chunk_size)

    def run_chunk(index: int) -> ChunkStatistics:
        rng = derive_rng(seed, *stream, index)
        Z = rng.standard_normal((sizes[index], dim))
        values = np.asarray(sample_fn(Z), dtype=float)
        return ChunkStatistics.of(values)

    stats = parallel_map(run_chunk, list(range(len(sizes))), workers)
    total = stats[0]
    for chunk in stats[1:]:
        total = total.merge(chunk)

    logger.debug("Monte Carlo: K=%d, media=%.6g, stderr=%.3g", samples, total.mean, total.stderr)
    return MonteCarloEstimate(
        estimate=total.mean,
        stderr=total.stderr,
        samples=samples,
        inputs={"dim": dim, "seed": seed, "stream": list(stream)},
    )
