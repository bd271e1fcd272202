"""
Ajuste de la aproximación de Laplace: modo, H_V = n·∇²v(x̂) y su Cholesky.
"""

import logging

import numpy as np

from .newton import NewtonModeFinder
from ..models.base_model import ModelCapabilities
from ...domain.errors import ConvergenceError, DegenerateFitError
from ...domain.fit import LaplaceFit

logger = logging.getLogger(__name__)


def fit(
    model: ModelCapabilities,
    x0=None,
    tol: float = NewtonModeFinder.DEFAULT_TOL,
    max_iter: int = NewtonModeFinder.DEFAULT_MAX_ITER,
) -> LaplaceFit:
    """
    Compone la búsqueda del modo con el Hessiano y su factorización.

    Raises:
        ModeDivergedError / SingularHessianError: propagados desde Newton
        ConvergenceError: si Newton agota las iteraciones
        DegenerateFitError: si H_V no es definida positiva en el modo
    """
    search = NewtonModeFinder().solve(model=model, x0=x0, tol=tol, max_iter=max_iter)
    if not search.success:
        raise ConvergenceError(
            f"Newton no alcanzó la tolerancia en {search.iterations} iteraciones (‖∇V‖ = {search.grad_norm:.3g})"
        )

    mode = np.array(search.mode)
    hess_v = model.hess_v(mode)
    hess_v = 0.5 * (hess_v + hess_v.T)
    hessian = model.n * hess_v
    if not np.all(np.isfinite(hessian)):
        raise DegenerateFitError()
    try:
        chol = np.linalg.cholesky(hessian)
    except np.linalg.LinAlgError as exc:
        raise DegenerateFitError() from exc

    lambda_min = float(np.linalg.eigvalsh(hess_v)[0])
    logger.info("Ajuste de Laplace: d=%d, λ_min(H_v)=%.6g", model.dim, lambda_min)

    return LaplaceFit(
        mode=mode,
        hessian=hessian,
        chol=chol,
        n=model.n,
        grad_norm=search.grad_norm,
        iterations=search.iterations,
        lambda_min_Hv=lambda_min,
    )
