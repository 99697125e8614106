# arma/estimate.py

"""
Maximum-likelihood ARMA estimation.

The series is standardized before fitting, so the optimizer works on unit
scale and any shift of the input moves only the fitted mean. AR and MA
coefficients are searched through the partial-autocorrelation transform; a
subset model with lags fixed at zero searches its free coefficients directly
and rejects non-stationary or non-invertible candidates.
"""

import numpy as np

from arma.likelihood import concentrated_loglike, exact_loglike, innovations
from arma.models import ArmaFit, ArmaSpec
from arma.transforms import (
    ar_to_pacf,
    constrain_ar,
    constrain_ma,
    is_invertible,
    is_stationary,
    pacf_to_ar,
)
from series_core.describe import autocorrelations, partial_autocorrelations
from series_core.models import Series, SeriesKind
from utils.errors import ConvergenceError, DegenerateDataError, InputError
from utils.logger import setup_logger
from utils.optimize import minimize_objective, standard_errors

logger = setup_logger(__name__)

_BOUNDARY = 1.0 - 1e-6
_START_PACF = 0.9


def _expand(spec: ArmaSpec, free_ar, free_ma) -> tuple[np.ndarray, np.ndarray]:
    ar = np.zeros(spec.p)
    ma = np.zeros(spec.q)
    ar[[k - 1 for k in spec.free_ar]] = free_ar
    ma[[k - 1 for k in spec.free_ma]] = free_ma
    return ar, ma


class _Layout:
    """Slices of the optimizer vector: [mean?, ar (free), ma (free)]."""

    def __init__(self, spec: ArmaSpec):
        self.spec = spec
        self.n_mean = int(spec.include_mean)
        self.n_ar = len(spec.free_ar) if spec.is_subset else spec.p
        self.n_ma = len(spec.free_ma) if spec.is_subset else spec.q

    @property
    def size(self) -> int:
        return self.n_mean + self.n_ar + self.n_ma

    def coefficients(self, x):
        """Natural (mean, ar, ma) from an optimizer vector; None if inadmissible."""
        mean = x[0] if self.n_mean else 0.0
        u_ar = x[self.n_mean : self.n_mean + self.n_ar]
        u_ma = x[self.n_mean + self.n_ar :]
        if self.spec.is_subset:
            ar, ma = _expand(self.spec, u_ar, u_ma)
            if not is_stationary(ar) or not is_invertible(ma, strict=True):
                return None
            return mean, ar, ma
        return mean, constrain_ar(u_ar), constrain_ma(u_ma)

    def start(self, z: np.ndarray) -> np.ndarray:
        """AR part from half the sample partial autocorrelations, MA at zero."""
        x0 = np.zeros(self.size)
        spec = self.spec
        if spec.p:
            pacf = 0.5 * np.clip(partial_autocorrelations(autocorrelations(z, spec.p)), -_START_PACF, _START_PACF)
            if spec.is_subset:
                ar_start = pacf_to_ar(pacf)[[k - 1 for k in spec.free_ar]]
            else:
                ar_start = np.arctanh(pacf)
            x0[self.n_mean : self.n_mean + self.n_ar] = ar_start
        return x0


def _at_boundary(ar: np.ndarray) -> bool:
    if ar.size == 0 or not np.any(ar):
        return False
    try:
        return bool(np.max(np.abs(ar_to_pacf(ar))) > _BOUNDARY)
    except ValueError:
        return True


def information_criteria(log_lik: float, k: int, n: int) -> tuple[float, float]:
    return -2.0 * log_lik + 2.0 * k, -2.0 * log_lik + k * np.log(n)


def build_arma_fit(
    s: Series,
    spec: ArmaSpec,
    mean_c: float,
    ar,
    ma,
    sigma2: float,
    std_errors: dict | None = None,
    converged: bool = True,
) -> ArmaFit:
    """
    Assemble an ArmaFit from given parameters: residuals, exact log-likelihood
    and information criteria are computed from the series.
    """
    ar = np.asarray(ar, dtype=float).reshape(-1)
    ma = np.asarray(ma, dtype=float).reshape(-1)
    if ar.size != spec.p or ma.size != spec.q:
        raise InputError(f"{spec.label()} needs {spec.p} AR and {spec.q} MA coefficients")
    if sigma2 <= 0:
        raise InputError(f"innovation variance must be positive, got {sigma2}")
    x = s.values
    v, _ = innovations(x - mean_c, ar, ma)
    log_lik = exact_loglike(x, mean_c, ar, ma, sigma2)
    aic, bic = information_criteria(log_lik, spec.n_params, x.size)
    return ArmaFit(
        spec=spec,
        mean_c=float(mean_c),
        ar=tuple(float(a) for a in ar),
        ma=tuple(float(m) for m in ma),
        sigma2=float(sigma2),
        std_errors=dict(std_errors or {}),
        log_lik=log_lik,
        aic=aic,
        bic=bic,
        residuals=s.with_values(v, kind=SeriesKind.RESIDUAL, name=f"{s.name} residuals"),
        n=int(x.size),
        converged=converged,
        series=s,
    )


def _white_noise_fit(s: Series, spec: ArmaSpec) -> ArmaFit:
    """ARMA(0,0) has a closed-form MLE: sample mean and biased sample variance."""
    x = s.values
    n = x.size
    mean_c = float(x.mean()) if spec.include_mean else 0.0
    sigma2 = float(np.mean((x - mean_c) ** 2))
    std_errors = {"sigma2": sigma2 * np.sqrt(2.0 / n)}
    if spec.include_mean:
        std_errors["mean"] = np.sqrt(sigma2 / n)
    return build_arma_fit(s, spec, mean_c, [], [], sigma2, std_errors=std_errors)


def fit_arma(s: Series, spec: ArmaSpec, seed=None) -> ArmaFit:
    """
    Exact Gaussian MLE of an ARMA(p, q) with optional mean.
    """
    x = s.values
    n = x.size
    min_n = 10 * (spec.p + spec.q + 1)
    if n <= min_n:
        raise InputError(f"{spec.label()} needs more than {min_n} observations, got {n}")
    if np.ptp(x) == 0.0:
        raise DegenerateDataError(f"cannot fit {spec.label()} to a constant series")
    if not spec.free_ar and not spec.free_ma:
        return _white_noise_fit(s, spec)

    center = float(x.mean()) if spec.include_mean else 0.0
    scale = float(np.sqrt(np.mean((x - center) ** 2)))
    z = (x - center) / scale
    layout = _Layout(spec)

    def objective(params):
        natural = layout.coefficients(params)
        if natural is None:
            return np.inf
        mean, ar, ma = natural
        ll, _ = concentrated_loglike(z - mean, ar, ma)
        return -ll / n

    result = minimize_objective(objective, layout.start(z), seed=seed, label=f"{spec.label()} fit")
    mean_z, ar, ma = layout.coefficients(result.x)
    if _at_boundary(ar):
        raise ConvergenceError(f"{spec.label()} optimum lies on the stationarity boundary")
    _, sigma2_z = concentrated_loglike(z - mean_z, ar, ma)

    # Standard errors in the natural parameterization, standardized scale
    ar_idx = [k - 1 for k in spec.free_ar]
    ma_idx = [k - 1 for k in spec.free_ma]
    offset = int(spec.include_mean)
    natural = np.r_[[mean_z] * offset, ar[ar_idx], ma[ma_idx], sigma2_z]

    def loglik_natural(theta):
        mean = theta[0] if offset else 0.0
        ar_k, ma_k = _expand(spec, theta[offset : offset + len(ar_idx)], theta[offset + len(ar_idx) : -1])
        return exact_loglike(z, mean, ar_k, ma_k, theta[-1])

    se = standard_errors(loglik_natural, natural)
    names = ["mean"] * offset + [f"ar{k}" for k in spec.free_ar] + [f"ma{k}" for k in spec.free_ma]
    std_errors = dict(zip(names, se[:-1]))
    if offset:
        std_errors["mean"] *= scale
    std_errors["sigma2"] = se[-1] * scale**2

    mean_c = center + scale * mean_z if offset else 0.0
    fit = build_arma_fit(s, spec, mean_c, ar, ma, sigma2_z * scale**2, std_errors=std_errors)
    logger.info(
        f"✅ {spec.label()} fitted: log_lik={fit.log_lik:.4f}, AIC={fit.aic:.4f}, "
        f"sigma2={fit.sigma2:.6g} ({result.restarts} restart(s))"
    )
    return fit


def residuals(fit: ArmaFit) -> Series:
    """One-step-ahead prediction errors of the fitted model."""
    if not fit.converged:
        raise InputError("residuals requested from a fit that did not converge")
    return fit.residuals
