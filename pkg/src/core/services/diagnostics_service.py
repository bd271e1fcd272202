"""
Servicio que coordina modelos, ajuste, diagnósticos y oráculos.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from ..domain.dataset import Dataset
from ..domain.errors import ArgumentError
from ..domain.fit import LaplaceFit
from ..domain.report import DiagnosticsReport
from ..domain.solver_result import TvResult
from ..solvers.diagnostics import assemble_report, estimate_L
from ..solvers.laplace import fit
from ..solvers.models import (
    ModelCapabilities,
    PopulationLogisticModel,
    gaussian_sigmoid_moments,
    generate_dataset,
    logistic_model,
    population_logistic_model,
)
from ..solvers.monte_carlo import DEFAULT_CHUNK_SIZE
from ..solvers.oracle import (
    gamma_tail_check,
    lemma31_lower_bound,
    polar_tail_check,
    population_L_exact,
    tv_bruteforce,
)

logger = logging.getLogger(__name__)

# Rejillas de parámetros de las verificaciones de colas
GAMMA_TAIL_GRID = [(10.0, 2.0), (2.0 + 1e-9, 2.0), (50.0, 1.0), (5.0, 0.5), (30.0, 7.5)]
POLAR_TAIL_GRID = [(4.0, 1.0, 0.0, 4), (4.0, 1.0, 2.0, 2), (4.0, 1.0, 2.0, 4), (4.0, 1.0, 2.0, 8)]


@dataclass
class TvComparison:
    """TV por cuadratura frente al término principal L."""
    tv: TvResult
    L: float
    ratio: float


@dataclass
class TailCheck:
    """Una fila de verificación de cota de cola."""
    kind: str
    params: Dict[str, float]
    exact: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.exact <= self.bound


class DiagnosticsService:
    """
    Fachada de la biblioteca para la capa de línea de comandos.

    Cada método compone operaciones de los solvers sin estado propio,
    de modo que dos llamadas con los mismos argumentos dan el mismo resultado.
    """

    # ==================== DATOS Y MODELOS ====================

    def generate(self, d: int, n: int, seed: int = 0, beta=None) -> Dataset:
        return generate_dataset(d, n, beta=beta, seed=seed)

    def model_for(
        self,
        data: Optional[Dataset] = None,
        population_d: Optional[int] = None,
        population_n: Optional[float] = None,
        allow_low_dim: bool = False,
    ) -> ModelCapabilities:
        """Modelo logístico sobre datos, o el modelo poblacional (d, n)."""
        if data is not None:
            return logistic_model(data)
        if population_d is None or population_n is None:
            raise ArgumentError("Se requiere un conjunto de datos o el par (d, n) del modelo poblacional")
        if allow_low_dim:
            return PopulationLogisticModel(population_d, population_n)
        return population_logistic_model(population_d, population_n)

    def fit(self, model: ModelCapabilities) -> LaplaceFit:
        return fit(model)

    # ==================== DIAGNÓSTICOS ====================

    def diagnose(
        self,
        model: ModelCapabilities,
        samples: int,
        restarts: int,
        R: float,
        seed: int,
        probe_count: int,
        R0: float = 1.0,
        workers: int = 1,
        fitted: Optional[LaplaceFit] = None,
    ) -> DiagnosticsReport:
        fitted = fitted or fit(model)
        return assemble_report(
            fitted, model, samples=samples, restarts=restarts, R=R, seed=seed,
            probe_count=probe_count, R0=R0, workers=workers,
        )

    # ==================== ORÁCULOS ====================

    def oracle_tv(self, model: ModelCapabilities) -> TvComparison:
        """
        TV por cuadratura y L de referencia.

        Para el modelo poblacional L sale de la cuadratura exacta; en otro
        caso de Monte Carlo con el tamaño de bloque por defecto.
        """
        fitted = fit(model)
        tv = tv_bruteforce(model, fitted)
        if isinstance(model, PopulationLogisticModel):
            L = population_L_exact(gaussian_sigmoid_moments(), model.dim, model.n)
        else:
            L, _ = estimate_L(fitted, model, samples=64 * DEFAULT_CHUNK_SIZE)
        ratio = tv.tv / L if L > 0 else float("nan")
        logger.info("Oráculo TV: tv=%.6g, L=%.6g, cociente=%.4f", tv.tv, L, ratio)
        return TvComparison(tv=tv, L=L, ratio=ratio)

    def oracle_lemma31(self, d: int, n: float) -> Dict[str, float]:
        moments = gaussian_sigmoid_moments()
        bound = lemma31_lower_bound(moments, d, n)
        exact = population_L_exact(moments, d, n)
        return {"d": d, "n": n, "lower_bound": bound, "L_exact": exact}

    def oracle_tails(self) -> List[TailCheck]:
        checks = []
        for lam, c in GAMMA_TAIL_GRID:
            exact, bound = gamma_tail_check(lam, c)
            checks.append(TailCheck("gamma", {"lambda": lam, "c": c}, exact, bound))
        for a, b, p, d in POLAR_TAIL_GRID:
            exact, bound = polar_tail_check(a, b, p, d)
            checks.append(TailCheck("polar", {"a": a, "b": b, "p": p, "d": d}, exact, bound))
        return checks
