"""
Módulo de modelos - potenciales con sus derivadas.
"""

from .base_model import ModelCapabilities, RankOneStructure
from .sigmoid import sigmoid, softplus, sigmoid_prime, sigmoid_second, sigmoid_third, sigmoid_derivative
from .gaussian_moments import gaussian_sigmoid_moments, sigmoid_moment_table, DEFAULT_QUADRATURE_ORDER
from .logistic import LogisticRegressionModel, logistic_model
from .population import PopulationLogisticModel, population_logistic_model
from .quartic import QuarticTestModel, quartic_test_model
from .transforms import AffineTransformedModel, RescaledModel
from .data_generation import generate_dataset, default_beta

__all__ = [
    "ModelCapabilities",
    "RankOneStructure",
    "sigmoid",
    "softplus",
    "sigmoid_prime",
    "sigmoid_second",
    "sigmoid_third",
    "sigmoid_derivative",
    "gaussian_sigmoid_moments",
    "sigmoid_moment_table",
    "DEFAULT_QUADRATURE_ORDER",
    "LogisticRegressionModel",
    "logistic_model",
    "PopulationLogisticModel",
    "population_logistic_model",
    "QuarticTestModel",
    "quartic_test_model",
    "AffineTransformedModel",
    "RescaledModel",
    "generate_dataset",
    "default_beta",
]
