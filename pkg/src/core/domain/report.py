"""
Modelos de datos del reporte de diagnóstico.
"""

from typing import List, Optional
from pydantic import BaseModel, Field


class GaussianMoments(BaseModel):
    """
    Momentos gaussianos de las derivadas de la sigmoide.

    a[k-1][p] = E[σ^{(k)}(Z)Zᵖ] para k ∈ {1, 2, 3}, p ∈ {0, ..., 4}.
    """

    a: List[List[float]] = Field(..., description="Tabla 3×5 de momentos")
    quadrature_order: int = Field(..., ge=1, description="Orden de Gauss–Hermite usado")

    def moment(self, k: int, p: int) -> float:
        """Devuelve a_{k,p}."""
        return self.a[k - 1][p]


class A2LeftCheck(BaseModel):
    """Resultado de la verificación del lado izquierdo de la hipótesis A2."""

    c0: Optional[float] = Field(default=None, description="c₀ = R₀/4 si ambas condiciones se cumplen")
    reason: Optional[str] = Field(default=None, description="Condición violada, si la hay")


class RadiusCheck(BaseModel):
    """Condiciones sobre el radio R del teorema principal."""

    admissible: bool = Field(..., description="R ≥ max(R₀, 4c₀, 4)")
    theorem_form: bool = Field(..., description="R·c₀ − 2 log R ≥ 10")
    lemma_form: bool = Field(..., description="R·c₀ − 2 log R ≥ 6 + 2k con k = 1")


class DiagnosticsReport(BaseModel):
    """Reporte completo de diagnósticos del error de la aproximación de Laplace."""

    d: int = Field(..., ge=1, description="Dimensión")
    n: float = Field(..., gt=0, description="Escala de tamaño muestral")

    L_hat: float = Field(..., ge=0, description="Término principal L estimado por Monte Carlo")
    L_stderr: float = Field(..., ge=0, description="Error estándar de L_hat")
    K_samples: int = Field(..., ge=1, description="Muestras Monte Carlo")

    tilde_c3: float = Field(..., ge=0, description="Coeficiente c̃₃ en forma cerrada")
    c3_hat: float = Field(..., ge=0, description="c₃ estimado (cota inferior)")
    c4_hat: float = Field(..., ge=0, description="c₄(R) estimado (cota inferior)")
    R_used: float = Field(..., gt=0, description="Radio R usado para c₄")

    leading_bound: float = Field(..., description="c₃·d/√n")
    tilde_leading_bound: float = Field(..., description="c̃₃·d/√(8n)")
    remainder_bound: float = Field(..., description="(c₃d/√n)² + c₄d²/n + e^{−d/2}, constante C = 1")
    tv_interval: List[float] = Field(..., min_length=2, max_length=2, description="[L − resto, L + resto]")
    overall_bound: float = Field(..., description="c₃d/√n + c₄d²/n + e^{−d/4}")
    exp_term_half: float = Field(..., description="e^{−d/2}")
    exp_term_quarter: float = Field(..., description="e^{−d/4}")

    lsi_bound_hat: float = Field(..., ge=0, description="E‖∇r₃(Z)‖² estimado")
    lambda_min_Hv: float = Field(..., description="Autovalor mínimo de H_v")
    a2_left_c0: Optional[float] = Field(default=None, description="c₀ de la hipótesis A2, si se verifica")
    a2_c4_radius: float = Field(..., gt=0, description="Radio R del c₄ usado en la verificación de A2 (sustituye a R₀)")
    R0: float = Field(..., gt=0, description="Radio R₀ usado en la verificación de A2")
    R_condition_theorem: bool = Field(..., description="R·c₀ − 2 log R ≥ 10")
    R_condition_lemma: bool = Field(..., description="R·c₀ − 2 log R ≥ 8")

    seed: int = Field(..., ge=0, description="Semilla")
    flags: List[str] = Field(default_factory=list, description="Advertencias y etiquetas")
