"""
Jerarquía de excepciones del sistema.

Los errores de argumento (entradas inválidas) y los errores numéricos
(modo divergente, ajuste degenerado, etc.) se separan para que la capa
de presentación pueda traducirlos a códigos de salida distintos.
"""


class LaplaceDiagnosticsError(Exception):
    """Clase base de todos los errores del sistema."""


class ArgumentError(LaplaceDiagnosticsError, ValueError):
    """Parámetro de entrada inválido o fuera de rango."""


class DimensionMismatchError(ArgumentError):
    """Las dimensiones de los operandos no coinciden."""


class UnsupportedDimensionError(ArgumentError):
    """La operación no está definida para la dimensión solicitada."""


class CapabilityError(ArgumentError):
    """El modelo no expone la capacidad que requiere la operación."""


class NumericalError(LaplaceDiagnosticsError):
    """Fallo numérico durante el cálculo."""


class DomainError(NumericalError):
    """Valor fuera del dominio matemático (matriz no definida positiva, potencial no finito)."""


class ModeDivergedError(NumericalError):
    """La iteración de Newton se alejó sin límite: el MLE no existe."""

    def __init__(self, message: str = "mode diverged"):
        super().__init__(message)


class DegenerateFitError(NumericalError):
    """El Hessiano en el modo no es definido positivo."""

    def __init__(self, message: str = "degenerate fit"):
        super().__init__(message)


class SingularHessianError(NumericalError):
    """Demasiados pasos consecutivos con Hessiano singular."""


class ConvergenceError(NumericalError):
    """El método iterativo agotó sus iteraciones sin cumplir la tolerancia."""
