"""
Configuración global de la aplicación.
"""

import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError

from core.domain.errors import ArgumentError


def get_base_path() -> Path:
    """
    Obtiene la ruta base de la aplicación.

    Funciona tanto en desarrollo como cuando está empaquetada con PyInstaller.
    - En desarrollo: retorna la carpeta raíz del proyecto
    - Empaquetado (--onefile): retorna la carpeta temporal donde se extraen los datos
    - Empaquetado (--onedir): retorna la carpeta del ejecutable
    """
    if getattr(sys, 'frozen', False):
        if hasattr(sys, '_MEIPASS'):
            return Path(sys._MEIPASS)
        return Path(sys.executable).parent
    return Path(__file__).resolve().parent.parent


def get_data_path() -> Path:
    """
    Obtiene la ruta a la carpeta de datos.

    Busca primero 'data' en el directorio base y, si la aplicación está
    empaquetada, junto al ejecutable.
    """
    data_in_base = get_base_path() / "data"
    if data_in_base.exists():
        return data_in_base

    if getattr(sys, 'frozen', False):
        data_next_to_exe = Path(sys.executable).parent / "data"
        if data_next_to_exe.exists():
            return data_next_to_exe

    return data_in_base


# Rutas base
DATA_DIR = get_data_path()
CONFIG_FILE = DATA_DIR / "config.json"

APP_NAME = "laplace-diagnostics"
APP_VERSION = "1.0.0"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class NumericalDefaults:
    """Valores numéricos por defecto expuestos en la línea de comandos."""

    # Ascenso en la esfera
    OPNORM_RESTARTS = 32

    # Monte Carlo
    MC_SAMPLES = 100_000

    # Diagnósticos
    RADIUS = 4.0
    R0 = 1.0
    C4_PROBES = 16


class ExperimentDefaults:
    """Parámetros por defecto del experimento de escalamiento."""

    DIMS = (4, 8, 16, 32, 64)
    REPLICATES = 20


class DiagnosticsSettings(BaseModel):
    """Valores por defecto de la línea de comandos, leídos de data/config.json."""

    seed: int = Field(default=0, ge=0)
    mc_samples: int = Field(default=NumericalDefaults.MC_SAMPLES, ge=1)
    restarts: int = Field(default=NumericalDefaults.OPNORM_RESTARTS, ge=1)
    radius: float = Field(default=NumericalDefaults.RADIUS, gt=0)
    R0: float = Field(default=NumericalDefaults.R0, gt=0)
    probes: int = Field(default=NumericalDefaults.C4_PROBES, ge=0)
    workers: int = Field(default=1, ge=1)
    dims: List[int] = Field(default_factory=lambda: list(ExperimentDefaults.DIMS), min_length=1)
    replicates: int = Field(default=ExperimentDefaults.REPLICATES, ge=1)


def load_settings(path: Optional[Path] = None) -> DiagnosticsSettings:
    """
    Lee la configuración; si el archivo no existe se usan los valores de la clase.

    Raises:
        ArgumentError: si el archivo no es JSON válido o viola algún rango
    """
    path = Path(path) if path is not None else CONFIG_FILE
    if not path.exists():
        return DiagnosticsSettings()
    try:
        with open(path, 'r', encoding='utf-8') as f:
            raw = json.load(f)
        return DiagnosticsSettings.model_validate(raw.get("defaults", raw))
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"Configuración inválida en {path}: {exc.msg}") from exc
    except ValidationError as exc:
        error = exc.errors()[0]
        raise ArgumentError(f"Configuración inválida en {path}: {error['loc']}: {error['msg']}") from exc


def configure_logging(verbosity: int = 0) -> None:
    """0 → WARNING, 1 → INFO, 2 o más → DEBUG; siempre hacia stderr."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    root = logging.getLogger()
    for handler in list(root.handlers):
        if handler.get_name() == APP_NAME:
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(APP_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
