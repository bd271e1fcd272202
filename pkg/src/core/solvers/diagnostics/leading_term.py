"""
Término principal del error en variación total:

    L = (1/12)·E|⟨∇³W(0), Z⊗3⟩|,  Z ~ N(0, I_d)

estimado por Monte Carlo con las contracciones del modelo.
"""

import logging
from typing import Any, Dict, Optional

import numpy as np

from ..base_solver import BaseSolver
from ..laplace.whitening import whitened_third_contract_batch
from ..models.base_model import ModelCapabilities
from ..monte_carlo import STREAM_LEADING_TERM, gaussian_expectation
from ...domain.errors import ArgumentError
from ...domain.fit import LaplaceFit
from ...domain.solver_result import MonteCarloEstimate

logger = logging.getLogger(__name__)

LEADING_TERM_FACTOR = 1.0 / 12.0


class LeadingTermEstimator(BaseSolver):
    """Estimador Monte Carlo de L con error estándar."""

    name = "leading_term"
    description = "Término principal L del error de la aproximación de Laplace"

    MIN_SAMPLES = 1000
    DEFAULT_SAMPLES = 100_000

    def get_required_params(self) -> Dict[str, Dict[str, Any]]:
        return {
            "samples": {
                "type": int,
                "description": "Número de muestras K",
                "default": self.DEFAULT_SAMPLES,
                "range": (self.MIN_SAMPLES, np.inf),
            },
            "seed": {
                "type": int,
                "description": "Semilla",
                "default": 0,
                "range": (0, np.inf),
            },
            "workers": {
                "type": int,
                "description": "Hilos de evaluación",
                "default": 1,
                "range": (1, np.inf),
            },
        }

    def solve(
        self,
        fitted: Optional[LaplaceFit] = None,
        model: Optional[ModelCapabilities] = None,
        samples: int = DEFAULT_SAMPLES,
        seed: int = 0,
        workers: int = 1,
        **kwargs
    ) -> MonteCarloEstimate:
        if fitted is None or model is None:
            raise ArgumentError("Se requieren el ajuste y el modelo")
        self.require_valid(samples=samples, seed=seed, workers=workers)

        result = gaussian_expectation(
            lambda Z: LEADING_TERM_FACTOR * np.abs(whitened_third_contract_batch(fitted, model, Z)),
            dim=fitted.dim,
            samples=samples,
            seed=seed,
            stream=(STREAM_LEADING_TERM,),
            workers=workers,
        )
        logger.info("L = %.6g ± %.2g (K=%d)", result.estimate, result.stderr, samples)
        return result.model_copy(update={"solver_name": self.name})


def estimate_L(
    fitted: LaplaceFit,
    model: ModelCapabilities,
    samples: int = LeadingTermEstimator.DEFAULT_SAMPLES,
    seed: int = 0,
    workers: int = 1,
):
    """Devuelve (L_hat, stderr); determinista dada (seed, samples)."""
    result = LeadingTermEstimator().solve(fitted=fitted, model=model, samples=samples, seed=seed, workers=workers)
    return result.estimate, result.stderr
