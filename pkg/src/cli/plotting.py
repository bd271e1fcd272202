"""
Gráfico log-log del término principal L frente a la dimensión.

Se renderiza directamente a SVG sin pyplot; la sal de hashes fija y la
ausencia de fecha en los metadatos hacen que la salida sea reproducible.
"""

from pathlib import Path
from typing import Dict, List

import matplotlib
from matplotlib.figure import Figure

from core.domain.errors import ArgumentError
from core.domain.experiment import ExperimentResultRow, RegimeSummary
from core.services.experiment_service import REGIME_LABELS, ExperimentService, split_regimes

REGIME_COLORS = {"d2": "#2196F3", "d2.5": "#C62828"}

SVG_RC = {
    "svg.hashsalt": "laplace-diagnostics",
    "svg.fonttype": "none",
}


def build_figure(summaries: Dict[str, RegimeSummary]) -> Figure:
    """Media de L por dimensión con banda de cuantiles 10 %–90 % por régimen."""
    figure = Figure(figsize=(6, 4), dpi=100)
    ax = figure.add_subplot(111)

    for regime, summary in summaries.items():
        dims = [s.d for s in summary.dimensions]
        means = [s.mean_L for s in summary.dimensions]
        color = REGIME_COLORS.get(regime, "gray")
        ax.fill_between(
            dims,
            [s.q10_L for s in summary.dimensions],
            [s.q90_L for s in summary.dimensions],
            alpha=0.3, color=color, linewidth=0, gid=f"band-{regime}",
        )
        ax.plot(dims, means, color=color, linewidth=2, marker="o", label=REGIME_LABELS[regime], gid=f"mean-{regime}")

    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("Dimensión d")
    ax.set_ylabel("L (media de réplicas)")
    ax.set_title("Término principal de la aproximación de Laplace")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper right", fontsize=8)
    figure.tight_layout()
    return figure


def plot_experiment(rows: List[ExperimentResultRow], out_svg: Path) -> Path:
    """
    Escribe el SVG del experimento.

    Raises:
        ArgumentError: si no hay filas o alguna media no es positiva (eje log)
    """
    if not rows:
        raise ArgumentError("No hay filas de datos para graficar")
    grouped = split_regimes(rows)
    if not grouped:
        raise ArgumentError("Ninguna fila corresponde a n = 2d² ni a n = d^2.5")

    summaries = {regime: ExperimentService.summarize_regime(regime, group) for regime, group in grouped.items()}
    for summary in summaries.values():
        if any(s.q10_L <= 0 for s in summary.dimensions):
            raise ArgumentError("Los valores de L deben ser positivos para la escala logarítmica")

    out_svg = Path(out_svg)
    out_svg.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context(SVG_RC):
        figure = build_figure(summaries)
        figure.savefig(out_svg, format="svg", metadata={"Date": None})
    return out_svg
