"""
Modelos de resultados de los Solvers.
"""

from typing import Optional, List, Dict, Any
from pydantic import BaseModel, Field


class SolverResult(BaseModel):
    """Clase base para resultados de solvers."""

    solver_name: str = Field(default="", description="Nombre del solver utilizado")
    success: bool = Field(default=True, description="Si el cálculo convergió")
    error_message: Optional[str] = Field(default=None, description="Motivo si no convergió")

    inputs: Dict[str, Any] = Field(default_factory=dict, description="Parámetros de entrada")


class SphereMaximizationResult(SolverResult):
    """Resultado de la maximización multiarranque sobre la esfera unidad."""

    solver_name: str = "sphere_maximizer"

    value: float = Field(..., description="Mejor valor encontrado (cota inferior del supremo)")
    argmax: List[float] = Field(..., description="Punto de la esfera que alcanza el valor")
    restarts: int = Field(..., ge=1, description="Número de arranques")
    iterations: int = Field(..., ge=0, description="Iteraciones totales sobre todos los arranques")


class ModeSearchResult(SolverResult):
    """Resultado de la búsqueda del modo por Newton amortiguado."""

    solver_name: str = "newton_mode_finder"

    mode: List[float] = Field(..., description="Modo x̂")
    iterations: int = Field(..., ge=0, description="Iteraciones de Newton")
    grad_norm: float = Field(..., ge=0, description="‖∇V‖₂ en el modo")
    levenberg_steps: int = Field(default=0, ge=0, description="Pasos con amortiguamiento de Levenberg")


class MonteCarloEstimate(SolverResult):
    """Estimación Monte Carlo con su error estándar."""

    solver_name: str = "monte_carlo"

    estimate: float = Field(..., description="Media muestral")
    stderr: float = Field(..., ge=0, description="Desviación estándar muestral / √K")
    samples: int = Field(..., ge=1, description="Número de muestras K")


class CoefficientEstimate(SolverResult):
    """Estimación de un coeficiente de norma de operador (c₃ o c₄)."""

    value: float = Field(..., ge=0, description="Valor estimado (cota inferior)")
    probes: int = Field(default=1, ge=1, description="Puntos evaluados")


class TvResult(SolverResult):
    """Distancia de variación total por cuadratura."""

    solver_name: str = "tv_quadrature"

    tv: float = Field(..., ge=0, le=1, description="TV(ρ, γ) en coordenadas blanqueadas")
    normalizing_constant: float = Field(..., gt=0, description="∫ exp(−(W − W(0))) en la caja")
    quadrature_nodes: int = Field(..., ge=1, description="Nodos de la regla fina")
    estimated_error: float = Field(..., ge=0, description="|tv(2P) − tv(P)| al duplicar paneles")
