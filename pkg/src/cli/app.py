"""
Interfaz de línea de comandos.

Códigos de salida: 0 éxito, 1 error de argumentos, 2 error numérico
(modo divergente, ajuste degenerado).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, NoReturn, Optional

from config import APP_NAME, APP_VERSION, DiagnosticsSettings, configure_logging, load_settings
from core.domain.errors import ArgumentError, NumericalError

from . import commands

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ARGUMENT = 1
EXIT_NUMERICAL = 2


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que termina con código 1 ante errores de uso."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGUMENT, f"{self.prog}: error: {message}\n")


def _add_model_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", type=Path, help="CSV del conjunto de datos (regresión logística)")
    parser.add_argument("--model", choices=["population"], help="Usar el posterior poblacional idealizado")
    parser.add_argument("--d", type=int, help="Dimensión del modelo poblacional")
    parser.add_argument("--n", type=float, help="Tamaño muestral del modelo poblacional")


def build_parser(settings: DiagnosticsSettings) -> CliArgumentParser:
    parser = CliArgumentParser(prog=APP_NAME, description="Diagnósticos del error de la aproximación de Laplace")
    parser.add_argument("--version", action="version", version=f"%(prog)s {APP_VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Repetir para más detalle (INFO, DEBUG)")
    parser.add_argument("--config", type=Path, help="Archivo JSON de configuración")
    sub = parser.add_subparsers(dest="command", required=True)

    # generate
    p = sub.add_parser("generate", help="Genera un conjunto de datos de regresión logística")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=settings.seed)
    p.add_argument("--beta", type=float, nargs="+", help="Parámetro verdadero (por defecto e₁)")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=commands.cmd_generate)

    # fit
    p = sub.add_parser("fit", help="Ajusta la aproximación de Laplace")
    _add_model_source(p)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=commands.cmd_fit)

    # diagnose
    p = sub.add_parser("diagnose", help="Calcula el reporte de diagnósticos")
    _add_model_source(p)
    p.add_argument("--mc-samples", type=int, default=settings.mc_samples)
    p.add_argument("--seed", type=int, default=settings.seed)
    p.add_argument("--restarts", type=int, default=settings.restarts)
    p.add_argument("--radius", type=float, default=settings.radius)
    p.add_argument("--probes", type=int, default=settings.probes)
    p.add_argument("--R0", type=float, default=settings.R0)
    p.add_argument("--workers", type=int, default=settings.workers)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=commands.cmd_diagnose)

    # oracle
    p = sub.add_parser("oracle", help="Verdades de referencia")
    oracle = p.add_subparsers(dest="oracle", required=True)
    q = oracle.add_parser("tv", help="TV por cuadratura frente a L (d ≤ 2)")
    _add_model_source(q)
    q.add_argument("--out", type=Path)
    q.set_defaults(handler=commands.cmd_oracle_tv)
    q = oracle.add_parser("lemma31", help="Cota inferior de L frente a su valor exacto poblacional")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--n", type=float, required=True)
    q.add_argument("--out", type=Path)
    q.set_defaults(handler=commands.cmd_oracle_lemma31)
    q = oracle.add_parser("tails", help="Verificación de las cotas de colas")
    q.add_argument("--out", type=Path)
    q.set_defaults(handler=commands.cmd_oracle_tails)

    # experiment
    p = sub.add_parser("experiment", help="Experimento de escalamiento de L con la dimensión")
    p.add_argument("--dims", type=int, nargs="+", default=list(settings.dims))
    p.add_argument("--regime", choices=["d2", "d2.5", "both"], default="both")
    p.add_argument("--replicates", type=int, default=settings.replicates)
    p.add_argument("--base-seed", type=int, default=settings.seed)
    p.add_argument("--mc-samples", type=int, default=settings.mc_samples)
    p.add_argument("--workers", type=int, default=settings.workers)
    p.add_argument("--timing", action="store_true", help="Registrar wall_ms (la salida deja de ser reproducible)")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=commands.cmd_experiment)

    # plot
    p = sub.add_parser("plot", help="SVG log-log de L frente a d")
    p.add_argument("--in", dest="inputs", type=Path, nargs="+", required=True)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=commands.cmd_plot)

    return parser


def _preparse(argv: List[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("-v", "--verbose", action="count", default=0)
    pre.add_argument("--config", type=Path)
    known, _ = pre.parse_known_args(argv)
    return known


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    early = _preparse(argv)
    configure_logging(early.verbose)

    try:
        settings = load_settings(early.config)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_ARGUMENT

    try:
        args.handler(args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    except NumericalError as exc:
        print(f"error numérico: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK
