"""
Pruebas de la carga de configuración.
"""

import logging

import pytest

from config import (
    DiagnosticsSettings,
    ExperimentDefaults,
    NumericalDefaults,
    configure_logging,
    load_settings,
)
from core.domain.errors import ArgumentError


def test_missing_file_gives_defaults(tmp_path):
    assert load_settings(tmp_path / "absent.json") == DiagnosticsSettings()


def test_reads_defaults_block(tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"app_name": "x", "defaults": {"mc_samples": 500, "dims": [4, 8]}}', encoding="utf-8")
    settings = load_settings(path)
    assert settings.mc_samples == 500
    assert settings.dims == [4, 8]
    assert settings.restarts == DiagnosticsSettings().restarts


@pytest.mark.parametrize("content", ["{not json", '{"defaults": {"workers": 0}}', '{"defaults": {"dims": []}}'])
def test_invalid_content(tmp_path, content):
    path = tmp_path / "config.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ArgumentError):
        load_settings(path)


def test_shipped_config_is_valid():
    settings = load_settings()
    assert settings.dims == [4, 8, 16, 32, 64]
    assert settings.replicates == 20


@pytest.mark.parametrize("verbosity, level", [(0, logging.WARNING), (1, logging.INFO), (3, logging.DEBUG)])
def test_logging_levels(verbosity, level):
    configure_logging(verbosity)
    assert logging.getLogger().level == level


def _constants(cls):
    return {name: value for name, value in vars(cls).items() if name.isupper()}


def test_every_default_reaches_settings():
    settings = DiagnosticsSettings()
    consumed = {
        "OPNORM_RESTARTS": settings.restarts,
        "MC_SAMPLES": settings.mc_samples,
        "RADIUS": settings.radius,
        "R0": settings.R0,
        "C4_PROBES": settings.probes,
        "DIMS": tuple(settings.dims),
        "REPLICATES": settings.replicates,
    }
    declared = {**_constants(NumericalDefaults), **_constants(ExperimentDefaults)}
    assert declared == consumed
