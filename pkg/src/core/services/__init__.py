"""
Módulo de servicios - Fachadas usadas por la línea de comandos.
"""

from .diagnostics_service import DiagnosticsService, TvComparison, TailCheck
from .experiment_service import (
    ExperimentService,
    ExperimentRun,
    REGIMES,
    REGIME_LABELS,
    regime_sample_size,
    replicate_seed,
    split_regimes,
    splitmix64,
)

__all__ = [
    "DiagnosticsService",
    "TvComparison",
    "TailCheck",
    "ExperimentService",
    "ExperimentRun",
    "REGIMES",
    "REGIME_LABELS",
    "regime_sample_size",
    "replicate_seed",
    "split_regimes",
    "splitmix64",
]
