"""
Ascenso de gradiente proyectado con múltiples arranques sobre la esfera unidad.

Sirve para estimar normas de operador de tensores simétricos,
sup_{‖u‖=1} |⟨S, u⊗k⟩|, tanto con tensores densos como con
contracciones que proveen los modelos sin materializar el tensor.
"""

import logging
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from ..base_solver import BaseSolver
from ..monte_carlo import derive_rng
from ...domain.errors import ArgumentError
from ...domain.solver_result import SphereMaximizationResult

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], float]
Gradient = Callable[[np.ndarray], np.ndarray]


class SphereMaximizer(BaseSolver):
    """
    Maximiza f(u) sobre ‖u‖ = 1 por ascenso proyectado.

    En cada iteración se avanza en la dirección del gradiente tangente
    normalizado con paso η ≤ `step`, se renormaliza y se acepta el punto
    solo si f aumenta; si no, η se reduce a la mitad. Un arranque termina
    cuando el iterado se mueve menos que `move_tol` o tras `max_iter`
    iteraciones. El arranque i usa aleatoriedad derivada de (seed, i).
    """

    name = "sphere_maximizer"
    description = "Máximo de una función sobre la esfera unidad (multiarranque)"

    DEFAULT_RESTARTS = 32
    DEFAULT_STEP = 0.1
    DEFAULT_MOVE_TOL = 1e-10
    DEFAULT_MAX_ITER = 500

    def __init__(
        self,
        step: float = DEFAULT_STEP,
        move_tol: float = DEFAULT_MOVE_TOL,
        max_iter: int = DEFAULT_MAX_ITER,
    ):
        self.step = step
        self.move_tol = move_tol
        self.max_iter = max_iter

    def get_required_params(self) -> Dict[str, Dict[str, Any]]:
        return {
            "dim": {
                "type": int,
                "description": "Dimensión del espacio",
                "range": (1, np.inf),
            },
            "restarts": {
                "type": int,
                "description": "Número de arranques aleatorios",
                "default": self.DEFAULT_RESTARTS,
                "range": (1, np.inf),
            },
            "seed": {
                "type": int,
                "description": "Semilla de los arranques",
                "default": 0,
                "range": (0, np.inf),
            },
        }

    def _ascend(self, objective: Objective, gradient: Gradient, start: np.ndarray):
        u = start / np.linalg.norm(start)
        f = objective(u)
        eta = self.step
        converged = False
        iterations = 0

        for iterations in range(1, self.max_iter + 1):
            g = gradient(u)
            tangent = g - (g @ u) * u
            norm = np.linalg.norm(tangent)
            if norm == 0.0 or not np.isfinite(norm):
                converged = True
                break
            direction = tangent / norm

            # Backtracking: reducir η a la mitad hasta que f aumente
            accepted = False
            while eta >= self.move_tol:
                trial = u + eta * direction
                trial /= np.linalg.norm(trial)
                f_trial = objective(trial)
                if f_trial > f:
                    accepted = True
                    break
                eta *= 0.5
            if not accepted:
                converged = True
                break

            move = np.linalg.norm(trial - u)
            u, f = trial, f_trial
            if move < self.move_tol:
                converged = True
                break
            eta = min(2.0 * eta, self.step)

        return f, u, converged, iterations

    def solve(
        self,
        objective: Optional[Objective] = None,
        gradient: Optional[Gradient] = None,
        dim: Optional[int] = None,
        restarts: int = DEFAULT_RESTARTS,
        seed: int = 0,
        stream: Tuple[int, ...] = (),
        starts: Optional[Sequence[np.ndarray]] = None,
        **kwargs
    ) -> SphereMaximizationResult:
        """
        Ejecuta la maximización multiarranque.

        Args:
            objective: f(u), función escalar
            gradient: ∇f(u) en R^d (se proyecta al plano tangente)
            dim: Dimensión d
            restarts: Número de arranques uniformes en la esfera
            seed: Semilla; el arranque i usa (seed, *stream, i)
            stream: Claves adicionales del flujo aleatorio
            starts: Arranques explícitos (reemplazan a los aleatorios)

        Returns:
            SphereMaximizationResult con el mejor valor y su argumento
        """
        self.require_valid(dim=dim, restarts=restarts, seed=seed)
        if objective is None or gradient is None:
            raise ArgumentError("Se requieren la función objetivo y su gradiente")

        if starts is None:
            starts = [derive_rng(seed, *stream, i).standard_normal(dim) for i in range(restarts)]

        best_value = -np.inf
        best_u = np.asarray(starts[0], dtype=float)
        best_converged = False
        total_iterations = 0

        for start in starts:
            start = np.asarray(start, dtype=float)
            if np.linalg.norm(start) == 0.0:
                continue
            value, u, converged, iterations = self._ascend(objective, gradient, start)
            total_iterations += iterations
            if value > best_value:
                best_value, best_u, best_converged = value, u, converged

        if not best_converged:
            logger.warning(
                "La mejor solución no convergió en %d iteraciones (valor %.6g)",
                self.max_iter, best_value,
            )

        return SphereMaximizationResult(
            success=best_converged,
            error_message=None if best_converged else "máximo de iteraciones alcanzado",
            value=float(best_value),
            argmax=[float(x) for x in best_u],
            restarts=len(starts),
            iterations=total_iterations,
            inputs={"dim": dim, "restarts": restarts, "seed": seed},
        )


def maximize_abs_on_sphere(
    objective: Objective,
    gradient: Gradient,
    dim: int,
    restarts: int = SphereMaximizer.DEFAULT_RESTARTS,
    seed: int = 0,
    stream: Tuple[int, ...] = (),
    maximizer: Optional[SphereMaximizer] = None,
) -> SphereMaximizationResult:
    """
    sup_{‖u‖=1} |f(u)| optimizando f y −f desde los mismos arranques.

    El valor devuelto es una cota inferior del supremo verdadero.
    """
    maximizer = maximizer or SphereMaximizer()
    positive = maximizer.solve(
        objective=objective, gradient=gradient, dim=dim,
        restarts=restarts, seed=seed, stream=stream,
    )
    negative = maximizer.solve(
        objective=lambda u: -objective(u),
        gradient=lambda u: -gradient(u),
        dim=dim, restarts=restarts, seed=seed, stream=stream,
    )
    best = positive if positive.value >= negative.value else negative
    return best.model_copy(update={"value": max(best.value, 0.0)})
