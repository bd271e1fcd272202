"""
Módulo de dominio - Modelos de datos.
"""

from .errors import (
    LaplaceDiagnosticsError,
    ArgumentError,
    DimensionMismatchError,
    UnsupportedDimensionError,
    CapabilityError,
    NumericalError,
    DomainError,
    ModeDivergedError,
    DegenerateFitError,
    SingularHessianError,
    ConvergenceError,
)
from .tensors import SymTensor3, SymTensor4
from .dataset import Dataset
from .fit import LaplaceFit, FitRecord
from .solver_result import (
    SolverResult,
    SphereMaximizationResult,
    ModeSearchResult,
    MonteCarloEstimate,
    CoefficientEstimate,
    TvResult,
)
from .report import GaussianMoments, A2LeftCheck, RadiusCheck, DiagnosticsReport
from .experiment import (
    EXPERIMENT_COLUMNS,
    ExperimentResultRow,
    DivergedReplicate,
    DimensionSummary,
    RegimeSummary,
    ExperimentSummary,
)

__all__ = [
    "LaplaceDiagnosticsError",
    "ArgumentError",
    "DimensionMismatchError",
    "UnsupportedDimensionError",
    "CapabilityError",
    "NumericalError",
    "DomainError",
    "ModeDivergedError",
    "DegenerateFitError",
    "SingularHessianError",
    "ConvergenceError",
    "SymTensor3",
    "SymTensor4",
    "Dataset",
    "LaplaceFit",
    "FitRecord",
    "SolverResult",
    "SphereMaximizationResult",
    "ModeSearchResult",
    "MonteCarloEstimate",
    "CoefficientEstimate",
    "TvResult",
    "GaussianMoments",
    "A2LeftCheck",
    "RadiusCheck",
    "DiagnosticsReport",
    "EXPERIMENT_COLUMNS",
    "ExperimentResultRow",
    "DivergedReplicate",
    "DimensionSummary",
    "RegimeSummary",
    "ExperimentSummary",
]
