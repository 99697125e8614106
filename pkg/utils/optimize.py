# utils/optimize.py

"""
Likelihood maximization shared by the ARMA and volatility estimators.

Search runs in an unconstrained parameter space: a derivative-free simplex
pass followed by quasi-Newton refinement with finite-difference gradients.
Standard errors come from a central-difference Hessian of the log-likelihood
in the natural parameterization.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from config import OPT_FTOL, OPT_JITTER, OPT_MAX_ITER, OPT_RESTARTS
from utils.errors import ConvergenceError
from utils.helpers import jitter, make_rng
from utils.logger import setup_logger
from utils.retry import retry_with_restarts

logger = setup_logger(__name__)

_PENALTY = 1e10


@dataclass
class OptimResult:
    x: np.ndarray
    fun: float
    converged: bool
    n_iter: int
    restarts: int
    message: str


def _safe(objective):
    def wrapped(x):
        try:
            value = float(objective(x))
        except (FloatingPointError, ValueError, ZeroDivisionError, OverflowError, np.linalg.LinAlgError):
            return _PENALTY
        return value if np.isfinite(value) else _PENALTY

    return wrapped


def minimize_objective(
    objective,
    x0,
    seed=None,
    max_iter: int = OPT_MAX_ITER,
    ftol: float = OPT_FTOL,
    restarts: int = OPT_RESTARTS,
    label: str = "optimizer",
) -> OptimResult:
    """
    Minimize a (scaled) negative log-likelihood.

    Convergence means the final value is finite and either BFGS reports
    success, or stops on precision loss, or the relative change between the
    simplex and quasi-Newton optima is below ftol. Failures restart from a
    jittered copy of x0, at most `restarts` times.
    """
    x0 = np.asarray(x0, dtype=float)
    rng = make_rng(seed)
    f = _safe(objective)

    def attempt(k):
        start = x0 if k == 0 else jitter(x0, rng, OPT_JITTER)
        f_start = f(start)
        simplex = minimize(
            f,
            start,
            method="Nelder-Mead",
            options={
                "maxiter": max_iter * max(1, len(start)),
                "xatol": 1e-8,
                "fatol": ftol * max(1.0, abs(f_start)) if f_start < _PENALTY else ftol,
                "adaptive": len(start) > 2,
            },
        )
        refined = minimize(f, simplex.x, method="BFGS", options={"maxiter": max_iter, "gtol": 1e-6})
        best = refined if refined.fun <= simplex.fun else simplex
        if not np.isfinite(best.fun) or best.fun >= _PENALTY:
            raise ConvergenceError("objective is not finite at the optimum")
        rel_change = abs(simplex.fun - refined.fun) / max(1.0, abs(best.fun))
        converged = bool(refined.success or refined.status == 2 or rel_change < ftol)
        if not converged:
            raise ConvergenceError(str(refined.message))
        return OptimResult(
            x=np.asarray(best.x, dtype=float),
            fun=float(best.fun),
            converged=True,
            n_iter=int(simplex.nit + refined.nit),
            restarts=k,
            message=str(refined.message),
        )

    return retry_with_restarts(attempt, retries=restarts, label=label)


def numerical_hessian(func, x, rel_step: float = 1e-4) -> np.ndarray:
    """
    Central-difference Hessian of func at x.
    """
    x = np.asarray(x, dtype=float)
    k = len(x)
    h = rel_step * np.maximum(np.abs(x), 1e-2)
    hess = np.zeros((k, k))
    f0 = func(x)
    for i in range(k):
        ei = np.zeros(k)
        ei[i] = h[i]
        hess[i, i] = (func(x + 2 * ei) - 2 * f0 + func(x - 2 * ei)) / (4 * h[i] ** 2)
        for j in range(i + 1, k):
            ej = np.zeros(k)
            ej[j] = h[j]
            value = (
                func(x + ei + ej) - func(x + ei - ej) - func(x - ei + ej) + func(x - ei - ej)
            ) / (4 * h[i] * h[j])
            hess[i, j] = hess[j, i] = value
    return hess


def standard_errors(loglik_func, x) -> np.ndarray:
    """
    Square roots of the diagonal of the inverse observed information.
    Entries are NaN when the information matrix is not positive definite.
    """
    hess = numerical_hessian(loglik_func, x)
    if not np.all(np.isfinite(hess)):
        logger.warning("Hessian has non-finite entries; standard errors unavailable")
        return np.full(len(x), np.nan)
    try:
        cov = np.linalg.inv(-hess)
    except np.linalg.LinAlgError:
        logger.warning("Information matrix is singular; standard errors unavailable")
        return np.full(len(x), np.nan)
    diag = np.diag(cov)
    if np.any(diag <= 0):
        logger.warning("Information matrix is not positive definite at the optimum")
    return np.sqrt(np.where(diag > 0, diag, np.nan))
