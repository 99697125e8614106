# garch/estimate.py

"""
Gaussian maximum-likelihood GARCH(p, q) and eGARCH(1,1) on mean-free residuals.

GARCH constraints are exact by construction: alpha0 = exp(x0) and the
ARCH/GARCH coefficients share a softmax with an implicit reference weight,
so each is positive and their sum stays below one. eGARCH maps its
log-variance persistence through tanh. Both fits run on residuals rescaled
to unit mean square; GARCH standard errors are computed on that scale and
mapped back, eGARCH ones on the original scale.
"""

import numpy as np

from config import MIN_VOL_OBS
from garch.models import EgarchFit, GarchFit
from garch.recursions import egarch_log_variance, garch_variance, gaussian_loglike
from series_core.models import Series, SeriesKind
from utils.errors import DegenerateDataError, InputError
from utils.logger import setup_logger
from utils.optimize import minimize_objective, standard_errors

logger = setup_logger(__name__)

_UNIT_PERSISTENCE = 0.9999


def _check_residuals(residuals: Series, what: str) -> np.ndarray:
    u = residuals.values if isinstance(residuals, Series) else np.asarray(residuals, dtype=float)
    if u.size < MIN_VOL_OBS:
        raise InputError(f"{what} needs at least {MIN_VOL_OBS} observations, got {u.size}")
    if np.ptp(u) == 0.0:
        raise DegenerateDataError(f"{what} on constant residuals")
    return u


def _as_series(residuals) -> Series:
    if isinstance(residuals, Series):
        return residuals
    return Series(values=residuals, name="residuals", kind=SeriesKind.RESIDUAL)


def _standardized(residuals: Series, cond_var: np.ndarray) -> Series:
    z = residuals.values / np.sqrt(cond_var[: len(residuals)])
    return residuals.with_values(z, kind=SeriesKind.RESIDUAL, name=f"{residuals.name} standardized")


# -----------------------------
# GARCH(p, q)
# -----------------------------
def _garch_unpack(x: np.ndarray, q: int, p: int):
    weights = np.exp(x[1:])
    denom = 1.0 + weights.sum()
    return float(np.exp(x[0])), weights[:q] / denom, weights[q : q + p] / denom


def _garch_start(q: int, p: int) -> np.ndarray:
    alpha = np.full(q, 0.05 / q)
    beta = np.full(p, 0.9 / p) if p else np.empty(0)
    rest = 1.0 - alpha.sum() - beta.sum()
    return np.r_[np.log(rest), np.log(np.r_[alpha, beta] / rest)]


def build_garch_fit(
    residuals,
    alpha0: float,
    alpha,
    beta,
    std_errors: dict | None = None,
    log_lik: float | None = None,
    converged: bool = True,
    mean: float = 0.0,
) -> GarchFit:
    """
    GarchFit for given parameters: replays the variance recursion from the
    sample-variance start and derives standardized residuals.
    """
    residuals = _as_series(residuals)
    u = residuals.values
    alpha = tuple(float(a) for a in np.atleast_1d(alpha))
    beta = tuple(float(b) for b in np.atleast_1d(beta))
    if alpha0 <= 0 or any(a < 0 for a in alpha) or any(b < 0 for b in beta):
        raise InputError("GARCH needs alpha0 > 0 and non-negative alpha, beta")
    sigma2 = garch_variance(u, alpha0, alpha, beta, init=float(np.var(u)))
    cond_var = sigma2[:-1].copy()
    cond_var.setflags(write=False)
    persistence = sum(alpha) + sum(beta)
    return GarchFit(
        alpha0=float(alpha0),
        alpha=alpha,
        beta=beta,
        std_errors=dict(std_errors or {}),
        log_lik=gaussian_loglike(u, cond_var) if log_lik is None else log_lik,
        cond_var=cond_var,
        residuals=residuals,
        std_residuals=_standardized(residuals, cond_var),
        next_variance=float(sigma2[-1]),
        converged=converged,
        near_unit_persistence=persistence > _UNIT_PERSISTENCE,
        mean=mean,
    )


def fit_garch(residuals: Series, q_arch: int = 1, p_garch: int = 1, seed=None, mean: float = 0.0) -> GarchFit:
    """
    q_arch lagged squared residuals, p_garch lagged variances.
    """
    if q_arch < 1 or p_garch < 0:
        raise InputError(f"GARCH orders need q_arch >= 1 and p_garch >= 0, got ({q_arch}, {p_garch})")
    what = f"GARCH({p_garch},{q_arch})"
    u = _check_residuals(residuals, what)
    n = u.size
    scale = float(np.sqrt(np.mean(u * u)))
    v = u / scale
    init = float(np.var(v))

    def objective(x):
        alpha0, alpha, beta = _garch_unpack(x, q_arch, p_garch)
        return -gaussian_loglike(v, garch_variance(v, alpha0, alpha, beta, init)) / n

    logger.info(f"🌪️ Fitting {what} on {n} residuals")
    result = minimize_objective(objective, _garch_start(q_arch, p_garch), seed=seed, label=f"{what} fit")
    alpha0_v, alpha, beta = _garch_unpack(result.x, q_arch, p_garch)

    def loglik_natural(theta):
        return gaussian_loglike(v, garch_variance(v, theta[0], theta[1 : 1 + q_arch], theta[1 + q_arch :], init))

    se = standard_errors(loglik_natural, np.r_[alpha0_v, alpha, beta])
    names = ["alpha0"] + [f"alpha{i}" for i in range(1, q_arch + 1)] + [f"beta{j}" for j in range(1, p_garch + 1)]
    std_errors = dict(zip(names, se))
    std_errors["alpha0"] = se[0] * scale**2

    fit = build_garch_fit(
        _as_series(residuals),
        alpha0_v * scale**2,
        alpha,
        beta,
        std_errors=std_errors,
        mean=mean,
    )
    if fit.near_unit_persistence:
        logger.warning(f"⚠️ {what} persistence {fit.persistence:.6f} is at the stationarity boundary")
    logger.info(
        f"✅ {what} fitted: alpha0={fit.alpha0:.4g}, persistence={fit.persistence:.4f}, log_lik={fit.log_lik:.4f}"
    )
    return fit


# -----------------------------
# eGARCH(1,1)
# -----------------------------
def build_egarch_fit(
    residuals,
    omega: float,
    beta: float,
    alpha: float,
    gamma: float,
    std_errors: dict | None = None,
    converged: bool = True,
    mean: float = 0.0,
) -> EgarchFit:
    residuals = _as_series(residuals)
    u = residuals.values
    if not abs(beta) < 1.0:
        raise InputError(f"eGARCH needs |beta| < 1, got {beta}")
    lnh = egarch_log_variance(u, omega, beta, alpha, gamma, init=float(np.var(u)))
    h = np.exp(lnh)
    cond_var = h[:-1].copy()
    cond_var.setflags(write=False)
    return EgarchFit(
        omega=float(omega),
        beta_lnh=float(beta),
        alpha_mag=float(alpha),
        gamma_sign=float(gamma),
        std_errors=dict(std_errors or {}),
        log_lik=gaussian_loglike(u, cond_var),
        cond_var=cond_var,
        residuals=residuals,
        std_residuals=_standardized(residuals, cond_var),
        next_variance=float(h[-1]),
        converged=converged,
        near_unit_persistence=abs(beta) > _UNIT_PERSISTENCE,
        mean=mean,
    )


def fit_egarch(residuals: Series, seed=None, mean: float = 0.0) -> EgarchFit:
    u = _check_residuals(residuals, "eGARCH(1,1)")
    n = u.size
    scale = float(np.sqrt(np.mean(u * u)))
    v = u / scale
    init = float(np.var(v))

    def objective(x):
        lnh = egarch_log_variance(v, x[0], np.tanh(x[1]), x[2], x[3], init)
        return -gaussian_loglike(v, np.exp(lnh)) / n

    logger.info(f"🌪️ Fitting eGARCH(1,1) on {n} residuals")
    x0 = np.array([0.0, np.arctanh(0.9), 0.1, 0.0])
    result = minimize_objective(objective, x0, seed=seed, label="eGARCH(1,1) fit")
    omega_v, beta, alpha, gamma = result.x[0], float(np.tanh(result.x[1])), result.x[2], result.x[3]
    omega = omega_v + (1.0 - beta) * np.log(scale**2)

    u_init = float(np.var(u))

    def loglik_natural(theta):
        if not abs(theta[1]) < 1.0:
            return -np.inf
        return gaussian_loglike(u, np.exp(egarch_log_variance(u, theta[0], theta[1], theta[2], theta[3], u_init)))

    se = standard_errors(loglik_natural, np.array([omega, beta, alpha, gamma]))
    fit = build_egarch_fit(
        _as_series(residuals),
        omega,
        beta,
        alpha,
        gamma,
        std_errors=dict(zip(("omega", "beta", "alpha", "gamma"), se)),
        mean=mean,
    )
    if fit.near_unit_persistence:
        logger.warning(f"⚠️ eGARCH log-variance persistence {beta:.6f} is at the stationarity boundary")
    logger.info(f"✅ eGARCH(1,1) fitted: beta={beta:.4f}, gamma={gamma:.4f}, log_lik={fit.log_lik:.4f}")
    return fit


def standardized_residuals(fit: GarchFit | EgarchFit) -> Series:
    """z_t = u_t / sqrt(sigma_t^2)."""
    if not fit.converged:
        raise InputError("standardized residuals requested from a fit that did not converge")
    return fit.std_residuals
