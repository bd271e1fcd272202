"""
Ensamblado del reporte de diagnóstico.

    leading_bound       = c₃·d/√n
    tilde_leading_bound = c̃₃·d/√(8n)
    remainder_bound     = (c₃d/√n)² + c₄d²/n + e^{−d/2}     (C = 1)
    tv_interval         = [max(0, L − resto), L + resto]
    overall_bound       = c₃d/√n + c₄d²/n + e^{−d/4}
"""

import logging
import math

from .assumptions import check_a2_left, radius_conditions
from .coefficients import C3Estimator, C4Estimator, tilde_c3
from .leading_term import LeadingTermEstimator
from .lsi import LsiEstimator
from ..models.base_model import ModelCapabilities
from ..tensor.sphere_maximizer import SphereMaximizer
from ...domain.fit import LaplaceFit
from ...domain.report import DiagnosticsReport

logger = logging.getLogger(__name__)

FLAG_CONSTANT = "absolute constant C set to 1 in remainder_bound and tv_interval"
FLAG_C3_ESTIMATED = "c3_hat estimated (multistart lower bound)"
FLAG_C4_ESTIMATED = "c4_hat estimated (multistart lower bound over sampled probes)"
FLAG_TWELFTH = "L includes the 1/12 prefactor"

DEFAULT_R0 = 1.0
# Holgura en errores estándar para la comparación L ≤ c̃₃·d/√(8n)
ORDERING_SLACK = 3.0


def assemble_report(
    fitted: LaplaceFit,
    model: ModelCapabilities,
    samples: int = LeadingTermEstimator.DEFAULT_SAMPLES,
    restarts: int = SphereMaximizer.DEFAULT_RESTARTS,
    R: float = C4Estimator.DEFAULT_RADIUS,
    seed: int = 0,
    probe_count: int = C4Estimator.DEFAULT_PROBES,
    R0: float = DEFAULT_R0,
    workers: int = 1,
    tilde_method: str = "auto",
) -> DiagnosticsReport:
    """
    Calcula todos los campos del reporte; cualquier error de un
    sub-estimador se propaga y no se emite un reporte parcial.
    """
    d = fitted.dim
    n = model.n
    sqrt_n = math.sqrt(n)
    flags = [FLAG_CONSTANT, FLAG_C3_ESTIMATED, FLAG_C4_ESTIMATED, FLAG_TWELFTH]

    leading = LeadingTermEstimator().solve(fitted=fitted, model=model, samples=samples, seed=seed, workers=workers)
    tilde = tilde_c3(fitted, model, method=tilde_method)
    c3 = C3Estimator().solve(fitted=fitted, model=model, restarts=restarts, seed=seed)
    c4 = C4Estimator().solve(
        fitted=fitted, model=model, R=R, probe_count=probe_count,
        restarts=restarts, seed=seed, workers=workers,
    )
    lsi = LsiEstimator().solve(fitted=fitted, model=model, samples=samples, seed=seed, workers=workers)

    if not c3.success:
        flags.append("c3 multistart did not converge")
    if not c4.success:
        flags.append("c4 multistart did not converge")

    leading_bound = c3.value * d / sqrt_n
    tilde_bound = tilde * d / math.sqrt(8.0 * n)
    quartic_term = c4.value * d * d / n
    exp_half = math.exp(-d / 2.0)
    exp_quarter = math.exp(-d / 4.0)
    remainder = leading_bound ** 2 + quartic_term + exp_half
    overall = leading_bound + quartic_term + exp_quarter

    L_hat = leading.estimate
    if L_hat - ORDERING_SLACK * leading.stderr > tilde_bound:
        flags.append("L_hat exceeds tilde_leading_bound beyond 3 stderr")
        logger.warning("L = %.6g supera c̃₃·d/√(8n) = %.6g", L_hat, tilde_bound)

    # c₄(R) se usa como sustituto conservador de c₄(R₀) con R ≥ R₀
    a2 = check_a2_left(c3.value, c4.value, R0, d, n)
    if R != R0:
        flags.append(f"A2 left side checked with c4(R={R:g}) in place of c4(R0={R0:g})")
    if a2.c0 is None:
        flags.append(f"A2 left side not verified: {a2.reason}")
    radius = radius_conditions(R, a2.c0, R0)
    if not radius.admissible:
        flags.append("R below max(R0, 4c0, 4)")
    if not radius.theorem_form:
        flags.append("R*c0 - 2 log R >= 10 not satisfied")
    if not radius.lemma_form:
        flags.append("R*c0 - 2 log R >= 8 not satisfied")

    return DiagnosticsReport(
        d=d,
        n=n,
        L_hat=L_hat,
        L_stderr=leading.stderr,
        K_samples=samples,
        tilde_c3=tilde,
        c3_hat=c3.value,
        c4_hat=c4.value,
        R_used=R,
        leading_bound=leading_bound,
        tilde_leading_bound=tilde_bound,
        remainder_bound=remainder,
        tv_interval=[max(0.0, L_hat - remainder), L_hat + remainder],
        overall_bound=overall,
        exp_term_half=exp_half,
        exp_term_quarter=exp_quarter,
        lsi_bound_hat=lsi.estimate,
        lambda_min_Hv=fitted.lambda_min_Hv,
        a2_left_c0=a2.c0,
        a2_c4_radius=R,
        R0=R0,
        R_condition_theorem=radius.theorem_form,
        R_condition_lemma=radius.lemma_form,
        seed=seed,
        flags=flags,
    )
