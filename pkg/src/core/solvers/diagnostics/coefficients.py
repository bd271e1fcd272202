"""
Coeficientes de la cota: c̃₃ en forma cerrada y las normas de operador c₃, c₄(R).

Con ∇³W(0) el tercer tensor del potencial blanqueado:

    c̃₃²·d²/n = (1/3)‖∇³W(0)‖_F² + (1/2)‖⟨∇³W(0), I⟩‖²
    c₃ = ‖∇³v(x̂)‖_{H_v} = √n·sup_{‖z‖=1} |⟨∇³W(0), z⊗3⟩|
    c₄(R) = sup_{‖x − x̂‖_{H_v} ≤ R√(d/n)} ‖∇⁴v(x)‖_{H_v}

c₃ y c₄ se estiman con ascenso multiarranque y son cotas inferiores.
"""

import logging
import math
from typing import Any, Dict, Optional

import numpy as np

from ..base_solver import BaseSolver
from ..laplace.whitening import whitened_point, whitened_third_tensor
from ..models.base_model import ModelCapabilities
from ..monte_carlo import STREAM_C3_STARTS, STREAM_C4_PROBES, STREAM_C4_STARTS, derive_rng, parallel_map
from ..tensor.sphere_maximizer import SphereMaximizer, maximize_abs_on_sphere
from ...domain.errors import ArgumentError, CapabilityError
from ...domain.fit import LaplaceFit
from ...domain.solver_result import CoefficientEstimate

logger = logging.getLogger(__name__)

TILDE_C3_METHODS = ("auto", "rank_one", "dense")

# Filas de la matriz de Gram procesadas por bloque en la vía de rango uno
_GRAM_BLOCK = 256


def _rank_one_value(fitted: LaplaceFit, model: ModelCapabilities) -> Optional[float]:
    structure = model.rank_one_structure(fitted.mode)
    if structure is None:
        return None
    weights = np.asarray(structure.weights, dtype=float)
    # Bₗ = L⁻¹Xₗ, guardados como filas
    B = fitted.pull_back(structure.vectors)
    norms = np.einsum("ij,ij->i", B, B)
    weighted_norms = weights * norms

    frob = 0.0
    trace = 0.0
    for start in range(0, B.shape[0], _GRAM_BLOCK):
        block = slice(start, start + _GRAM_BLOCK)
        gram = B[block] @ B.T
        frob += float(weights[block] @ (gram ** 3 @ weights))
        trace += float(weighted_norms[block] @ (gram @ weighted_norms))
    return frob / 3.0 + trace / 2.0


def _dense_value(fitted: LaplaceFit, model: ModelCapabilities) -> Optional[float]:
    tensor = whitened_third_tensor(fitted, model)
    if tensor is None:
        return None
    trace = tensor.identity_contraction()
    return tensor.frobenius() ** 2 / 3.0 + float(trace @ trace) / 2.0


def tilde_c3(fitted: LaplaceFit, model: ModelCapabilities, method: str = "auto") -> float:
    """
    c̃₃ por suma de rango uno (O(d²m + dm²)) o por el tensor denso (O(md³)).

    Con method="auto" se prefiere rango uno cuando m ≤ d², que es la vía
    más barata en ese caso.

    Raises:
        CapabilityError: si el modelo no ofrece la vía pedida
    """
    if method not in TILDE_C3_METHODS:
        raise ArgumentError(f"Método desconocido para c̃₃: {method}")
    d = fitted.dim

    value: Optional[float] = None
    if method == "rank_one":
        value = _rank_one_value(fitted, model)
    elif method == "dense":
        value = _dense_value(fitted, model)
    else:
        structure = model.rank_one_structure(fitted.mode)
        prefer_rank_one = structure is not None and structure.vectors.shape[0] <= d * d
        if prefer_rank_one:
            value = _rank_one_value(fitted, model)
        else:
            value = _dense_value(fitted, model)
            if value is None:
                value = _rank_one_value(fitted, model)

    if value is None:
        raise CapabilityError(
            f"El modelo '{model.name}' no ofrece estructura de rango uno ni tensor denso ({method})"
        )
    return math.sqrt(max(value, 0.0) * model.n) / d


class C3Estimator(BaseSolver):
    """c₃ = √n·‖∇³W(0)‖ estimada sin materializar el tensor."""

    name = "c3_estimator"
    description = "Norma de operador ponderada de ∇³v en el modo"

    def __init__(self, maximizer: Optional[SphereMaximizer] = None):
        self.maximizer = maximizer or SphereMaximizer()

    def get_required_params(self) -> Dict[str, Dict[str, Any]]:
        return {
            "restarts": {
                "type": int,
                "description": "Arranques del ascenso",
                "default": SphereMaximizer.DEFAULT_RESTARTS,
                "range": (1, np.inf),
            },
            "seed": {
                "type": int,
                "description": "Semilla",
                "default": 0,
                "range": (0, np.inf),
            },
        }

    def solve(
        self,
        fitted: Optional[LaplaceFit] = None,
        model: Optional[ModelCapabilities] = None,
        restarts: int = SphereMaximizer.DEFAULT_RESTARTS,
        seed: int = 0,
        **kwargs
    ) -> CoefficientEstimate:
        if fitted is None or model is None:
            raise ArgumentError("Se requieren el ajuste y el modelo")
        self.require_valid(restarts=restarts, seed=seed)
        n = model.n

        def objective(z: np.ndarray) -> float:
            return n * model.third_contract_v(fitted.mode, fitted.whiten(z))

        def gradient(z: np.ndarray) -> np.ndarray:
            return 3.0 * n * fitted.pull_back(model.third_gradient_v(fitted.mode, fitted.whiten(z)))

        best = maximize_abs_on_sphere(
            objective, gradient, fitted.dim, restarts=restarts, seed=seed,
            stream=(STREAM_C3_STARTS,), maximizer=self.maximizer,
        )
        return CoefficientEstimate(
            solver_name=self.name,
            success=best.success,
            error_message=best.error_message,
            value=math.sqrt(n) * best.value,
            probes=1,
            inputs={"restarts": restarts, "seed": seed},
        )


class C4Estimator(BaseSolver):
    """
    c₄(R) como máximo sobre el centro y puntos uniformes de la bola
    ‖w‖ ≤ R√d en coordenadas blanqueadas (x = x̂ + L⁻ᵀw).
    """

    name = "c4_estimator"
    description = "Norma de operador ponderada de ∇⁴v en una bola alrededor del modo"

    DEFAULT_RADIUS = 4.0
    DEFAULT_PROBES = 16

    def __init__(self, maximizer: Optional[SphereMaximizer] = None):
        self.maximizer = maximizer or SphereMaximizer()

    def get_required_params(self) -> Dict[str, Dict[str, Any]]:
        return {
            "R": {
                "type": float,
                "description": "Radio de la bola (en unidades de √(d/n))",
                "default": self.DEFAULT_RADIUS,
                "range": (1e-300, np.inf),
            },
            "probe_count": {
                "type": int,
                "description": "Puntos aleatorios además del centro",
                "default": self.DEFAULT_PROBES,
                "range": (0, np.inf),
            },
            "restarts": {
                "type": int,
                "description": "Arranques del ascenso por punto",
                "default": SphereMaximizer.DEFAULT_RESTARTS,
                "range": (1, np.inf),
            },
            "seed": {
                "type": int,
                "description": "Semilla",
                "default": 0,
                "range": (0, np.inf),
            },
        }

    @staticmethod
    def probe_points(dim: int, R: float, probe_count: int, seed: int):
        """Centro y probe_count puntos uniformes en la bola de radio R√d."""
        radius = R * math.sqrt(dim)
        points = [np.zeros(dim)]
        for i in range(probe_count):
            rng = derive_rng(seed, STREAM_C4_PROBES, i)
            direction = rng.standard_normal(dim)
            direction /= np.linalg.norm(direction)
            points.append(radius * rng.random() ** (1.0 / dim) * direction)
        return points

    def solve(
        self,
        fitted: Optional[LaplaceFit] = None,
        model: Optional[ModelCapabilities] = None,
        R: float = DEFAULT_RADIUS,
        probe_count: int = DEFAULT_PROBES,
        restarts: int = SphereMaximizer.DEFAULT_RESTARTS,
        seed: int = 0,
        workers: int = 1,
        **kwargs
    ) -> CoefficientEstimate:
        if fitted is None or model is None:
            raise ArgumentError("Se requieren el ajuste y el modelo")
        self.require_valid(R=R, probe_count=probe_count, restarts=restarts, seed=seed)
        n = model.n
        probes = self.probe_points(fitted.dim, R, probe_count, seed)

        def point_norm(index: int):
            x = whitened_point(fitted, probes[index])

            def objective(z: np.ndarray) -> float:
                return n * model.fourth_contract_v(x, fitted.whiten(z))

            def gradient(z: np.ndarray) -> np.ndarray:
                return 4.0 * n * fitted.pull_back(model.fourth_gradient_v(x, fitted.whiten(z)))

            return maximize_abs_on_sphere(
                objective, gradient, fitted.dim, restarts=restarts, seed=seed,
                stream=(STREAM_C4_STARTS, index), maximizer=self.maximizer,
            )

        results = parallel_map(point_norm, list(range(len(probes))), workers)
        best = max(results, key=lambda r: r.value)
        converged = all(r.success for r in results)
        if not converged:
            logger.warning("c₄: %d de %d puntos sin convergencia", sum(not r.success for r in results), len(results))

        return CoefficientEstimate(
            solver_name=self.name,
            success=converged,
            error_message=None if converged else "máximo de iteraciones alcanzado en algún punto",
            value=n * best.value,
            probes=len(probes),
            inputs={"R": R, "probe_count": probe_count, "restarts": restarts, "seed": seed},
        )


def estimate_c3(
    fitted: LaplaceFit,
    model: ModelCapabilities,
    restarts: int = SphereMaximizer.DEFAULT_RESTARTS,
    seed: int = 0,
) -> float:
    return C3Estimator().solve(fitted=fitted, model=model, restarts=restarts, seed=seed).value


def estimate_c4(
    fitted: LaplaceFit,
    model: ModelCapabilities,
    R: float = C4Estimator.DEFAULT_RADIUS,
    probe_count: int = C4Estimator.DEFAULT_PROBES,
    seed: int = 0,
    restarts: int = SphereMaximizer.DEFAULT_RESTARTS,
    workers: int = 1,
) -> float:
    return C4Estimator().solve(
        fitted=fitted, model=model, R=R, probe_count=probe_count,
        restarts=restarts, seed=seed, workers=workers,
    ).value
