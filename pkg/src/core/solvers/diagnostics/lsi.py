"""
Estimador de comparación basado en la desigualdad log-Sobolev:

    E‖∇r₃(Z)‖²,  ∇r₃(z) = ∇W(z) − z
"""

from typing import Optional

import numpy as np

from .leading_term import LeadingTermEstimator
from ..laplace.whitening import whitened_gradient_batch
from ..models.base_model import ModelCapabilities
from ..monte_carlo import STREAM_LSI, gaussian_expectation
from ...domain.errors import ArgumentError
from ...domain.fit import LaplaceFit
from ...domain.solver_result import MonteCarloEstimate


class LsiEstimator(LeadingTermEstimator):
    """Monte Carlo de E‖∇W(Z) − Z‖², con los mismos parámetros que L."""

    name = "lsi_bound"
    description = "Cota de comparación por la desigualdad log-Sobolev"

    def solve(
        self,
        fitted: Optional[LaplaceFit] = None,
        model: Optional[ModelCapabilities] = None,
        samples: int = LeadingTermEstimator.DEFAULT_SAMPLES,
        seed: int = 0,
        workers: int = 1,
        **kwargs
    ) -> MonteCarloEstimate:
        if fitted is None or model is None:
            raise ArgumentError("Se requieren el ajuste y el modelo")
        self.require_valid(samples=samples, seed=seed, workers=workers)

        def squared_residual(Z: np.ndarray) -> np.ndarray:
            residual = whitened_gradient_batch(fitted, model, Z) - Z
            return np.einsum("ij,ij->i", residual, residual)

        result = gaussian_expectation(
            squared_residual, dim=fitted.dim, samples=samples, seed=seed,
            stream=(STREAM_LSI,), workers=workers,
        )
        return result.model_copy(update={"solver_name": self.name})


def lsi_bound_estimate(
    fitted: LaplaceFit,
    model: ModelCapabilities,
    samples: int = LeadingTermEstimator.DEFAULT_SAMPLES,
    seed: int = 0,
    workers: int = 1,
) -> float:
    return LsiEstimator().solve(fitted=fitted, model=model, samples=samples, seed=seed, workers=workers).estimate
