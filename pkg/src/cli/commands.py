"""
Implementación de los subcomandos.

Cada función recibe el Namespace de argparse; los errores de la biblioteca
se propagan y `app.main` los traduce a códigos de salida.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from core.domain.errors import ArgumentError
from core.services import DiagnosticsService, ExperimentService, REGIMES
from core.solvers.models import ModelCapabilities
from infrastructure import CsvRepository, JsonRepository, dumps

from .plotting import plot_experiment

logger = logging.getLogger(__name__)

_service = DiagnosticsService()
_csv = CsvRepository()


def _json_repository() -> JsonRepository:
    return JsonRepository(Path.cwd())


def _emit(data: Any, out: Path = None) -> None:
    """Escribe a archivo si se indicó --out; en otro caso a stdout."""
    if out is not None:
        _json_repository().save(out, data)
    else:
        sys.stdout.write(dumps(data))


def _model_from_args(args: argparse.Namespace, allow_low_dim: bool = False) -> ModelCapabilities:
    if args.data is not None and args.model is not None:
        raise ArgumentError("Use --data o --model population, no ambos")
    if args.data is not None:
        return _service.model_for(data=_csv.load_dataset(args.data))
    if args.model == "population":
        if args.d is None or args.n is None:
            raise ArgumentError("--model population requiere --d y --n")
        return _service.model_for(population_d=args.d, population_n=args.n, allow_low_dim=allow_low_dim)
    raise ArgumentError("Se requiere --data o --model population")


# ==================== DATOS Y AJUSTE ====================

def cmd_generate(args: argparse.Namespace) -> None:
    data = _service.generate(args.d, args.n, seed=args.seed, beta=args.beta)
    _csv.save_dataset(args.out, data)
    logger.info("Conjunto de datos d=%d, n=%d escrito en %s", data.d, data.n, args.out)


def cmd_fit(args: argparse.Namespace) -> None:
    fitted = _service.fit(_model_from_args(args))
    _json_repository().save_fit(args.out, fitted)


def cmd_diagnose(args: argparse.Namespace) -> None:
    model = _model_from_args(args)
    report = _service.diagnose(
        model,
        samples=args.mc_samples,
        restarts=args.restarts,
        R=args.radius,
        seed=args.seed,
        probe_count=args.probes,
        R0=args.R0,
        workers=args.workers,
    )
    _json_repository().save_report(args.out, report)


# ==================== ORÁCULOS ====================

def cmd_oracle_tv(args: argparse.Namespace) -> None:
    comparison = _service.oracle_tv(_model_from_args(args, allow_low_dim=True))
    _emit(
        {
            "tv": comparison.tv.tv,
            "L": comparison.L,
            "ratio": comparison.ratio,
            "estimated_error": comparison.tv.estimated_error,
            "quadrature_nodes": comparison.tv.quadrature_nodes,
        },
        args.out,
    )


def cmd_oracle_lemma31(args: argparse.Namespace) -> None:
    result = _service.oracle_lemma31(args.d, args.n)
    result["holds"] = result["lower_bound"] <= result["L_exact"]
    _emit(result, args.out)


def cmd_oracle_tails(args: argparse.Namespace) -> None:
    checks = _service.oracle_tails()
    _emit(
        [
            {"kind": c.kind, "params": c.params, "exact": c.exact, "bound": c.bound, "holds": c.holds}
            for c in checks
        ],
        args.out,
    )


# ==================== EXPERIMENTO ====================

def summary_path(out_csv: Path) -> Path:
    return Path(out_csv).with_suffix(".summary.json")


def cmd_experiment(args: argparse.Namespace) -> None:
    regimes = list(REGIMES) if args.regime == "both" else [args.regime]
    service = ExperimentService(mc_samples=args.mc_samples, timing=args.timing)
    run = service.run(
        dims=args.dims,
        regimes=regimes,
        replicates=args.replicates,
        base_seed=args.base_seed,
        workers=args.workers,
    )
    _csv.save_experiment(args.out, run.all_rows())
    _json_repository().save_summary(summary_path(args.out), service.summarize(run, args.base_seed))


def cmd_plot(args: argparse.Namespace) -> None:
    rows = []
    for path in args.inputs:
        rows.extend(_csv.load_experiment(path))
    plot_experiment(rows, args.out)
