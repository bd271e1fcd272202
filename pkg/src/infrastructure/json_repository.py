"""
Repositorio basado en archivos JSON.

Los flotantes se escriben con 17 dígitos significativos y los no finitos
como null, de modo que la salida es reproducible byte a byte.
"""

import json
import math
from pathlib import Path
from typing import Any, Type, TypeVar

import numpy as np
from pydantic import BaseModel, ValidationError

from core.domain.errors import ArgumentError
from core.domain.experiment import ExperimentSummary
from core.domain.fit import FitRecord, LaplaceFit
from core.domain.report import DiagnosticsReport

T = TypeVar('T', bound=BaseModel)

INDENT = "  "


def format_float(value: float) -> str:
    """Representación JSON de un flotante: 17 dígitos significativos o null."""
    if not math.isfinite(value):
        return "null"
    text = format(value, ".17g")
    if "e" not in text and "." not in text and "n" not in text:
        text += ".0"
    return text


def _encode(value: Any, level: int) -> str:
    if isinstance(value, BaseModel):
        return _encode(value.model_dump(), level)
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, np.ndarray):
        return _encode(value.tolist(), level)

    pad = INDENT * (level + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + INDENT * level + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [pad + _encode(v, level + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + INDENT * level + "]"
    raise TypeError(f"Tipo no serializable: {type(value).__name__}")


def dumps(data: Any) -> str:
    """Serializa con sangría de 2 espacios y salto de línea final."""
    return _encode(data, 0) + "\n"


class JsonRepository:
    """
    Repositorio genérico para almacenamiento en archivos JSON.

    Lee y escribe los artefactos del programa (ajustes, reportes,
    resúmenes de experimentos) como modelos Pydantic.
    """

    def __init__(self, data_dir: Path):
        """
        Inicializa el repositorio.

        Args:
            data_dir: Directorio base; las rutas relativas se resuelven contra él
        """
        self.data_dir = Path(data_dir)

    def _resolve(self, path: Path) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self.data_dir / path

    def _read_json(self, filepath: Path) -> Any:
        """Lee un archivo JSON."""
        filepath = self._resolve(filepath)
        if not filepath.exists():
            raise ArgumentError(f"No existe el archivo {filepath}")
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"JSON inválido en {filepath}, línea {exc.lineno}: {exc.msg}") from exc

    def _write_json(self, filepath: Path, data: Any) -> Path:
        """Escribe datos a un archivo JSON."""
        filepath = self._resolve(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, 'w', encoding='utf-8', newline='\n') as f:
            f.write(dumps(data))
        return filepath

    def _dict_to_model(self, data: Any, model_class: Type[T]) -> T:
        """Convierte un diccionario a modelo Pydantic."""
        try:
            return model_class.model_validate(data)
        except ValidationError as exc:
            raise ArgumentError(f"Contenido inválido para {model_class.__name__}: {exc.errors()[0]['msg']}") from exc

    # ==================== AJUSTES ====================

    def save_fit(self, filepath: Path, fitted: LaplaceFit) -> Path:
        return self._write_json(filepath, fitted.to_record())

    def load_fit(self, filepath: Path) -> LaplaceFit:
        return self._dict_to_model(self._read_json(filepath), FitRecord).to_fit()

    # ==================== REPORTES ====================

    def save_report(self, filepath: Path, report: DiagnosticsReport) -> Path:
        return self._write_json(filepath, report)

    def load_report(self, filepath: Path) -> DiagnosticsReport:
        return self._dict_to_model(self._read_json(filepath), DiagnosticsReport)

    # ==================== EXPERIMENTOS ====================

    def save_summary(self, filepath: Path, summary: ExperimentSummary) -> Path:
        return self._write_json(filepath, summary)

    def load_summary(self, filepath: Path) -> ExperimentSummary:
        return self._dict_to_model(self._read_json(filepath), ExperimentSummary)

    def save(self, filepath: Path, data: Any) -> Path:
        """Escribe cualquier estructura serializable (salidas de oráculos)."""
        return self._write_json(filepath, data)
