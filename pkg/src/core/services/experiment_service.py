"""
Experimento de escalamiento de L para regresión logística con diseño gaussiano.

Para cada dimensión d y réplica se genera un conjunto de datos con tamaño
n = 2d² (régimen "d2") o n = d^{2.5} (régimen "d2.5"), se ajusta la
aproximación de Laplace y se estiman L y c̃₃.
"""

import logging
import math
import time
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from ..domain.errors import ArgumentError, NumericalError
from ..domain.experiment import (
    DimensionSummary,
    DivergedReplicate,
    ExperimentResultRow,
    ExperimentSummary,
    RegimeSummary,
)
from ..solvers.diagnostics import estimate_L, tilde_c3
from ..solvers.laplace import fit
from ..solvers.models import generate_dataset, logistic_model
from ..solvers.monte_carlo import parallel_map

logger = logging.getLogger(__name__)

REGIMES = ("d2", "d2.5")
REGIME_LABELS = {"d2": "n=2d^2", "d2.5": "n=d^2.5"}
ORDERING_SLACK = 3.0

_MASK64 = (1 << 64) - 1


def regime_sample_size(d: int, regime: str) -> int:
    """n = ⌊x + ½⌋ con x = 2d² o d^{2.5}."""
    if regime == "d2":
        x = 2.0 * d * d
    elif regime == "d2.5":
        x = float(d) ** 2.5
    else:
        raise ArgumentError(f"Régimen desconocido: {regime!r} (use d2 o d2.5)")
    return int(math.floor(x + 0.5))


def splitmix64(value: int) -> int:
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def replicate_seed(base_seed: int, d: int, replicate: int) -> int:
    """Semilla del conjunto de datos: base + splitmix64((d << 32) | réplica) mod 2⁶⁴."""
    return (base_seed + splitmix64(((d << 32) | replicate) & _MASK64)) & _MASK64


@dataclass(frozen=True)
class ReplicateTask:
    regime: str
    d: int
    replicate: int


@dataclass
class ExperimentRun:
    """Filas por régimen y réplicas excluidas."""
    rows: Dict[str, List[ExperimentResultRow]]
    diverged: List[DivergedReplicate]

    def all_rows(self) -> List[ExperimentResultRow]:
        """Filas ordenadas por (d, régimen, réplica)."""
        keyed = [
            ((row.d, order, row.replicate), row)
            for order, regime in enumerate(REGIMES)
            for row in self.rows.get(regime, [])
        ]
        return [row for _, row in sorted(keyed, key=lambda item: item[0])]


class ExperimentService:
    """Ejecuta y resume el experimento de escalamiento."""

    def __init__(self, mc_samples: int = 100_000, timing: bool = False):
        if mc_samples < 1:
            raise ArgumentError("mc_samples debe ser positivo")
        self.mc_samples = mc_samples
        self.timing = timing

    # ==================== EJECUCIÓN ====================

    def run_replicate(
        self, task: ReplicateTask, base_seed: int
    ) -> Union[ExperimentResultRow, DivergedReplicate]:
        n = regime_sample_size(task.d, task.regime)
        seed = replicate_seed(base_seed, task.d, task.replicate)
        started = time.perf_counter()
        data = generate_dataset(task.d, n, seed=seed)
        model = logistic_model(data)
        try:
            fitted = fit(model)
        except NumericalError as exc:
            logger.warning(
                "Réplica excluida (régimen %s, d=%d, réplica %d): %s", task.regime, task.d, task.replicate, exc
            )
            return DivergedReplicate(
                regime=task.regime, d=task.d, replicate=task.replicate, seed=seed, reason=str(exc)
            )

        L_hat, stderr = estimate_L(fitted, model, samples=self.mc_samples, seed=seed)
        c3_tilde = tilde_c3(fitted, model)
        wall_ms = int(round((time.perf_counter() - started) * 1000.0)) if self.timing else 0
        logger.info(
            "Régimen %s, d=%d, réplica %d: L=%.6g ± %.2g", task.regime, task.d, task.replicate, L_hat, stderr
        )
        return ExperimentResultRow(
            d=task.d,
            n=n,
            replicate=task.replicate,
            seed=seed,
            L_hat=max(L_hat, 0.0),
            L_stderr=stderr,
            tilde_c3=c3_tilde,
            lambda_min_Hv=fitted.lambda_min_Hv,
            wall_ms=wall_ms,
        )

    def run(
        self,
        dims: Sequence[int],
        regimes: Sequence[str],
        replicates: int,
        base_seed: int = 0,
        workers: int = 1,
    ) -> ExperimentRun:
        if not dims or any(d < 2 for d in dims):
            raise ArgumentError("Las dimensiones deben ser enteros ≥ 2")
        if replicates < 1:
            raise ArgumentError("Se requiere al menos una réplica")
        if base_seed < 0:
            raise ArgumentError("La semilla base debe ser no negativa")
        for regime in regimes:
            regime_sample_size(1, regime)

        ordered_regimes = [r for r in REGIMES if r in regimes]
        tasks = [
            ReplicateTask(regime, d, rep)
            for regime in ordered_regimes
            for d in sorted(set(dims))
            for rep in range(replicates)
        ]
        outcomes = parallel_map(lambda task: self.run_replicate(task, base_seed), tasks, workers)

        rows: Dict[str, List[ExperimentResultRow]] = {regime: [] for regime in ordered_regimes}
        diverged: List[DivergedReplicate] = []
        for task, outcome in zip(tasks, outcomes):
            if isinstance(outcome, DivergedReplicate):
                diverged.append(outcome)
            else:
                rows[task.regime].append(outcome)
        return ExperimentRun(rows=rows, diverged=diverged)

    # ==================== RESUMEN ====================

    @staticmethod
    def summarize_dimension(d: int, rows: List[ExperimentResultRow]) -> DimensionSummary:
        values = np.array([row.L_hat for row in rows])
        bounds = np.array([row.tilde_c3 * row.d / math.sqrt(8.0 * row.n) for row in rows])
        violations = sum(
            1 for row, bound in zip(rows, bounds) if row.L_hat - ORDERING_SLACK * row.L_stderr > bound
        )
        q10, q90 = np.quantile(values, [0.1, 0.9])
        return DimensionSummary(
            d=d,
            n=rows[0].n,
            replicates=len(rows),
            mean_L=float(np.mean(values)),
            q10_L=float(q10),
            q90_L=float(q90),
            mean_tilde_bound=float(np.mean(bounds)),
            ordering_violations=violations,
        )

    @classmethod
    def summarize_regime(cls, regime: str, rows: List[ExperimentResultRow]) -> RegimeSummary:
        by_dim: Dict[int, List[ExperimentResultRow]] = {}
        for row in rows:
            by_dim.setdefault(row.d, []).append(row)
        dimensions = [cls.summarize_dimension(d, by_dim[d]) for d in sorted(by_dim)]

        slope, ratio = None, None
        means = np.array([s.mean_L for s in dimensions])
        if regime == "d2.5" and len(dimensions) >= 2 and np.all(means > 0):
            log_d = np.log10([s.d for s in dimensions])
            slope = float(np.polyfit(log_d, np.log10(means), 1)[0])
        if regime == "d2" and dimensions and np.min(means) > 0:
            ratio = float(np.max(means) / np.min(means))
        return RegimeSummary(regime=regime, dimensions=dimensions, slope=slope, max_min_ratio=ratio)

    def summarize(self, run: ExperimentRun, base_seed: int) -> ExperimentSummary:
        regimes = {
            regime: self.summarize_regime(regime, rows) for regime, rows in run.rows.items()
        }
        if run.diverged:
            logger.warning("%d réplicas excluidas por divergencia del MLE", len(run.diverged))
        return ExperimentSummary(
            base_seed=base_seed, mc_samples=self.mc_samples, regimes=regimes, diverged=run.diverged
        )


def split_regimes(rows: Sequence[ExperimentResultRow]) -> Dict[str, List[ExperimentResultRow]]:
    """
    Asigna cada fila a los regímenes cuya fórmula de n satisface.

    Una fila puede pertenecer a ambos (d = 4 da n = 32 en los dos); las filas
    idénticas se cuentan una sola vez.
    """
    grouped: Dict[str, List[ExperimentResultRow]] = {regime: [] for regime in REGIMES}
    seen: Dict[str, set] = {regime: set() for regime in REGIMES}
    for row in rows:
        key: Tuple = tuple(row.model_dump().values())
        for regime in REGIMES:
            if row.n == regime_sample_size(row.d, regime) and key not in seen[regime]:
                seen[regime].add(key)
                grouped[regime].append(row)
    return {regime: group for regime, group in grouped.items() if group}
