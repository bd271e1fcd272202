"""
Módulo de infraestructura - Acceso a archivos JSON y CSV.
"""

from .json_repository import JsonRepository, dumps, format_float
from .csv_repository import CsvRepository

__all__ = ["JsonRepository", "CsvRepository", "dumps", "format_float"]
