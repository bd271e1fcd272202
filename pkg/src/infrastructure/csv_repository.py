"""
Lectura y escritura de archivos CSV (conjuntos de datos y filas del experimento).

Formato: UTF-8, saltos de línea LF, flotantes con 17 dígitos significativos.
Los errores de lectura indican el número de fila (1 = primera fila de datos).
"""

import csv
from pathlib import Path
from typing import Iterable, List

import numpy as np
from pydantic import ValidationError

from core.domain.dataset import Dataset
from core.domain.errors import ArgumentError
from core.domain.experiment import EXPERIMENT_COLUMNS, ExperimentResultRow


def _float_cell(value: float) -> str:
    return format(float(value), ".17g")


def _open_rows(filepath: Path) -> List[List[str]]:
    filepath = Path(filepath)
    if not filepath.exists():
        raise ArgumentError(f"No existe el archivo {filepath}")
    with open(filepath, 'r', encoding='utf-8', newline='') as f:
        return [row for row in csv.reader(f)]


class CsvRepository:
    """Persistencia CSV de datasets y resultados del experimento."""

    # ==================== DATASETS ====================

    @staticmethod
    def dataset_header(d: int) -> List[str]:
        return ["y"] + [f"x{j}" for j in range(1, d + 1)]

    def save_dataset(self, filepath: Path, data: Dataset) -> Path:
        filepath = Path(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(self.dataset_header(data.d))
            for label, row in zip(data.labels, data.features):
                writer.writerow([str(int(label))] + [_float_cell(x) for x in row])
        return filepath

    def load_dataset(self, filepath: Path) -> Dataset:
        rows = _open_rows(filepath)
        if not rows:
            raise ArgumentError("CSV vacío: falta el encabezado")
        header = rows[0]
        d = len(header) - 1
        if d < 1 or header != self.dataset_header(d):
            raise ArgumentError(f"Encabezado inválido: se esperaba y,x1,...,xd y se recibió {','.join(header)}")
        if len(rows) == 1:
            raise ArgumentError("El CSV no contiene filas de datos")

        labels = np.empty(len(rows) - 1, dtype=np.int64)
        features = np.empty((len(rows) - 1, d))
        for i, row in enumerate(rows[1:]):
            if len(row) != d + 1:
                raise ArgumentError(f"Fila {i + 1}: se esperaban {d + 1} columnas y hay {len(row)}")
            if row[0] not in ("0", "1"):
                raise ArgumentError(f"Fila {i + 1}: etiqueta inválida {row[0]!r}")
            labels[i] = int(row[0])
            try:
                features[i] = [float(cell) for cell in row[1:]]
            except ValueError as exc:
                raise ArgumentError(f"Fila {i + 1}: valor no numérico ({exc})") from exc
            if not np.all(np.isfinite(features[i])):
                raise ArgumentError(f"Fila {i + 1}: valor no finito")
        return Dataset(features=features, labels=labels)

    # ==================== EXPERIMENTO ====================

    def save_experiment(self, filepath: Path, rows: Iterable[ExperimentResultRow]) -> Path:
        filepath = Path(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(EXPERIMENT_COLUMNS)
            for row in rows:
                record = row.model_dump()
                writer.writerow([
                    _float_cell(record[col]) if isinstance(record[col], float) else str(record[col])
                    for col in EXPERIMENT_COLUMNS
                ])
        return filepath

    def load_experiment(self, filepath: Path) -> List[ExperimentResultRow]:
        rows = _open_rows(filepath)
        if not rows or rows[0] != EXPERIMENT_COLUMNS:
            raise ArgumentError(f"Encabezado inválido: se esperaba {','.join(EXPERIMENT_COLUMNS)}")
        if len(rows) == 1:
            raise ArgumentError("El CSV no contiene filas de datos")

        results = []
        for i, row in enumerate(rows[1:]):
            if len(row) != len(EXPERIMENT_COLUMNS):
                raise ArgumentError(
                    f"Fila {i + 1}: se esperaban {len(EXPERIMENT_COLUMNS)} columnas y hay {len(row)}"
                )
            try:
                results.append(ExperimentResultRow(**dict(zip(EXPERIMENT_COLUMNS, row))))
            except ValidationError as exc:
                error = exc.errors()[0]
                field = error["loc"][0] if error["loc"] else "?"
                raise ArgumentError(f"Fila {i + 1}: campo {field}: {error['msg']}") from exc
        return results
