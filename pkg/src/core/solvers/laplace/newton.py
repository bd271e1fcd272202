"""
Búsqueda del modo x̂ = arg min V por Newton amortiguado.
"""

import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from ..base_solver import BaseSolver
from ..models.base_model import ModelCapabilities
from ...domain.errors import ArgumentError, ModeDivergedError, SingularHessianError
from ...domain.solver_result import ModeSearchResult

logger = logging.getLogger(__name__)


class NewtonModeFinder(BaseSolver):
    """
    Newton amortiguado con búsqueda lineal de Armijo sobre v.

    Criterio de parada (escala V = n·v):

        ‖∇V(x)‖ ≤ tol·(1 + ‖∇V(x₀)‖)

    Si la factorización de Cholesky del Hessiano falla se usa un paso de
    Levenberg con desplazamiento μ = max(−λ_min, 0) + 1e-6·max(1, ‖g‖);
    tras 10 pasos consecutivos de ese tipo se aborta. Cuando el paso de
    Newton completo cumple Armijo se intenta duplicarlo mientras v siga
    bajando, de modo que en datos separables el iterado escapa rápido y
    se detecta la divergencia ‖x‖ > 10³·(1 + ‖x₀‖).
    """

    name = "newton_mode_finder"
    description = "Modo del potencial por Newton con búsqueda lineal"

    DEFAULT_TOL = 1e-9
    DEFAULT_MAX_ITER = 100
    ARMIJO = 1e-4
    DIVERGENCE_FACTOR = 1e3
    MAX_FALLBACKS = 10
    MAX_HALVINGS = 60
    MAX_EXPANSIONS = 10
    LEVENBERG_FLOOR = 1e-6

    def get_required_params(self) -> Dict[str, Dict[str, Any]]:
        return {
            "tol": {
                "type": float,
                "description": "Tolerancia relativa del gradiente",
                "default": self.DEFAULT_TOL,
                "range": (0, np.inf),
            },
            "max_iter": {
                "type": int,
                "description": "Máximo de iteraciones de Newton",
                "default": self.DEFAULT_MAX_ITER,
                "range": (0, np.inf),
            },
        }

    def _newton_step(self, g: np.ndarray, H: np.ndarray) -> Tuple[np.ndarray, bool]:
        """Dirección de descenso y si hizo falta el desplazamiento de Levenberg."""
        try:
            factor = cho_factor(H, lower=True)
            return -cho_solve(factor, g), False
        except LinAlgError:
            pass

        lam_min = float(np.linalg.eigvalsh(H)[0])
        mu = max(-lam_min, 0.0) + self.LEVENBERG_FLOOR * max(1.0, float(np.linalg.norm(g)))
        shifted = H + mu * np.eye(H.shape[0])
        try:
            factor = cho_factor(shifted, lower=True)
            return -cho_solve(factor, g), True
        except LinAlgError:
            return -g / mu, True

    def _line_search(
        self, model: ModelCapabilities, x: np.ndarray, f: float, g: np.ndarray, p: np.ndarray
    ) -> Optional[Tuple[np.ndarray, float]]:
        slope = float(g @ p)

        def armijo(alpha: float) -> Tuple[bool, float]:
            trial = model.v(x + alpha * p)
            return np.isfinite(trial) and trial <= f + self.ARMIJO * alpha * slope, trial

        ok, f_new = armijo(1.0)
        if ok:
            alpha = 1.0
            for _ in range(self.MAX_EXPANSIONS):
                ok_big, f_big = armijo(2.0 * alpha)
                if not (ok_big and f_big < f_new):
                    break
                alpha, f_new = 2.0 * alpha, f_big
            return x + alpha * p, f_new

        alpha = 1.0
        for _ in range(self.MAX_HALVINGS):
            alpha *= 0.5
            ok, f_new = armijo(alpha)
            if ok:
                return x + alpha * p, f_new
        return None

    def solve(
        self,
        model: Optional[ModelCapabilities] = None,
        x0=None,
        tol: float = DEFAULT_TOL,
        max_iter: int = DEFAULT_MAX_ITER,
        **kwargs
    ) -> ModeSearchResult:
        """
        Ejecuta Newton desde x₀ (por defecto el origen).

        Raises:
            ModeDivergedError: si ‖x‖ supera 10³·(1 + ‖x₀‖)
            SingularHessianError: tras 10 pasos de Levenberg consecutivos
        """
        if model is None:
            raise ArgumentError("Se requiere un modelo")
        self.require_valid(tol=tol, max_iter=max_iter)

        start = np.zeros(model.dim) if x0 is None else np.asarray(x0, dtype=float)
        if start.shape != (model.dim,) or not np.all(np.isfinite(start)):
            raise ArgumentError("El punto inicial debe ser un vector finito de dimensión d")

        n = model.n
        x = start.copy()
        f = model.v(x)
        g = model.grad_v(x)
        threshold = tol * (1.0 + n * float(np.linalg.norm(g)))
        limit = self.DIVERGENCE_FACTOR * (1.0 + float(np.linalg.norm(start)))

        fallbacks = 0
        levenberg_total = 0
        iterations = 0
        converged = n * float(np.linalg.norm(g)) <= threshold

        while not converged and iterations < max_iter:
            p, shifted = self._newton_step(g, model.hess_v(x))
            if shifted:
                fallbacks += 1
                levenberg_total += 1
                logger.warning("Hessiano no definido positivo en la iteración %d: paso de Levenberg", iterations)
                if fallbacks >= self.MAX_FALLBACKS:
                    raise SingularHessianError(
                        f"Hessiano singular en {self.MAX_FALLBACKS} iteraciones consecutivas"
                    )
            else:
                fallbacks = 0

            accepted = self._line_search(model, x, f, g, p)
            if accepted is None:
                # Cerca del óptimo v ya no distingue descensos: aceptar Newton si mejora el gradiente
                g_full = model.grad_v(x + p)
                if np.linalg.norm(g_full) >= np.linalg.norm(g):
                    logger.warning("Búsqueda lineal sin descenso en la iteración %d", iterations)
                    break
                accepted = (x + p, model.v(x + p))

            x, f = accepted
            g = model.grad_v(x)
            iterations += 1

            if float(np.linalg.norm(x)) > limit:
                raise ModeDivergedError()
            converged = n * float(np.linalg.norm(g)) <= threshold

        grad_norm = n * float(np.linalg.norm(g))
        if converged:
            logger.info("Newton convergió en %d iteraciones, ‖∇V‖ = %.3g", iterations, grad_norm)
        else:
            logger.warning("Newton no convergió en %d iteraciones, ‖∇V‖ = %.3g", iterations, grad_norm)

        return ModeSearchResult(
            success=converged,
            error_message=None if converged else "máximo de iteraciones alcanzado",
            mode=[float(v) for v in x],
            iterations=iterations,
            grad_norm=grad_norm,
            levenberg_steps=levenberg_total,
            inputs={"tol": tol, "max_iter": max_iter, "threshold": threshold},
        )


def find_mode(
    model: ModelCapabilities,
    x0=None,
    tol: float = NewtonModeFinder.DEFAULT_TOL,
    max_iter: int = NewtonModeFinder.DEFAULT_MAX_ITER,
) -> Tuple[np.ndarray, int]:
    """Devuelve (x̂, iteraciones); el resultado completo está en NewtonModeFinder.solve."""
    result = NewtonModeFinder().solve(model=model, x0=x0, tol=tol, max_iter=max_iter)
    return np.array(result.mode), result.iterations
