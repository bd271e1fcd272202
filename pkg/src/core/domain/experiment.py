"""
Modelos de datos del experimento de escalamiento.
"""

from typing import Dict, List, Optional
from pydantic import BaseModel, Field


# Columnas del CSV, en orden
EXPERIMENT_COLUMNS = [
    "d", "n", "replicate", "seed", "L_hat", "L_stderr", "tilde_c3", "lambda_min_Hv", "wall_ms",
]


class ExperimentResultRow(BaseModel):
    """Una réplica (d, régimen, réplica) del experimento."""

    d: int = Field(..., ge=1, description="Dimensión")
    n: int = Field(..., ge=1, description="Tamaño muestral")
    replicate: int = Field(..., ge=0, description="Índice de réplica")
    seed: int = Field(..., ge=0, description="Semilla del conjunto de datos")
    L_hat: float = Field(..., ge=0, description="Término principal estimado")
    L_stderr: float = Field(..., ge=0, description="Error estándar de L_hat")
    tilde_c3: float = Field(..., ge=0, description="Coeficiente c̃₃")
    lambda_min_Hv: float = Field(..., description="Autovalor mínimo de H_v")
    wall_ms: int = Field(default=0, ge=0, description="Tiempo de pared (0 si no se mide)")


class DivergedReplicate(BaseModel):
    """Réplica excluida porque el MLE no existe."""

    regime: str
    d: int
    replicate: int
    seed: int
    reason: str


class DimensionSummary(BaseModel):
    """Resumen por dimensión dentro de un régimen."""

    d: int
    n: int
    replicates: int = Field(..., ge=0, description="Réplicas incluidas")
    mean_L: float
    q10_L: float
    q90_L: float
    mean_tilde_bound: float = Field(..., description="Media de c̃₃·d/√(8n)")
    ordering_violations: int = Field(..., ge=0, description="Filas con L − 3σ > c̃₃·d/√(8n)")


class RegimeSummary(BaseModel):
    """Resumen de un régimen de tamaño muestral."""

    regime: str
    dimensions: List[DimensionSummary] = Field(default_factory=list)
    slope: Optional[float] = Field(default=None, description="Pendiente de log10(media L) vs log10(d)")
    max_min_ratio: Optional[float] = Field(default=None, description="max_d media L / min_d media L")


class ExperimentSummary(BaseModel):
    """Resumen completo del experimento."""

    base_seed: int
    mc_samples: int
    regimes: Dict[str, RegimeSummary] = Field(default_factory=dict)
    diverged: List[DivergedReplicate] = Field(default_factory=list)
