# garch/forecast.py

import sys

import numpy as np
from tqdm import tqdm

from arma.forecast import forecast as arma_forecast
from arma.models import ArmaFit
from config import EGARCH_FORECAST_PATHS, MAX_HORIZON, SEED
from garch.models import EgarchFit, GarchFit, ReturnForecast, VolForecast
from garch.recursions import E_ABS_Z
from utils.errors import InputError
from utils.helpers import make_rng
from utils.logger import setup_logger

logger = setup_logger(__name__)


def _check_horizon(h: int):
    if not 1 <= h <= MAX_HORIZON:
        raise InputError(f"forecast horizon must be in 1..{MAX_HORIZON}, got {h}")


def _garch_path(fit: GarchFit, h: int) -> np.ndarray:
    """
    sigma^2_{n+1} from the data, then
    sigma^2_{n+k} = alpha0 + sum_i alpha_i E[u^2_{n+k-i}] + sum_j beta_j sigma^2_{n+k-j},
    with E[u^2] = sigma^2 beyond the sample.
    """
    q, p = fit.q_arch, fit.p_garch
    u2_hist = list(fit.residuals.values[-q:] ** 2) if q else []
    var_hist = list(fit.cond_var[-p:]) if p else []
    u2_hist = [0.0] * (q - len(u2_hist)) + u2_hist
    var_hist = [0.0] * (p - len(var_hist)) + var_hist

    path = [fit.next_variance]
    u2_hist.append(fit.next_variance)
    var_hist.append(fit.next_variance)
    for _ in range(1, h):
        value = fit.alpha0
        for i in range(1, q + 1):
            value += fit.alpha[i - 1] * u2_hist[-i]
        for j in range(1, p + 1):
            value += fit.beta[j - 1] * var_hist[-j]
        path.append(value)
        u2_hist.append(value)
        var_hist.append(value)
    return np.array(path)


def _egarch_path(fit: EgarchFit, h: int, n_paths: int, seed) -> np.ndarray:
    """
    One step ahead is known; later steps average exp(ln h) over simulated
    standard normal shocks.
    """
    path = np.empty(h)
    path[0] = fit.next_variance
    if h == 1:
        return path
    rng = make_rng(seed)
    lnh = np.full(n_paths, np.log(fit.next_variance))
    steps = range(1, h)
    for k in tqdm(steps, desc="eGARCH paths", unit="step", disable=not sys.stderr.isatty() or h < 50):
        z = rng.standard_normal(n_paths)
        lnh = fit.omega + fit.beta_lnh * lnh + fit.alpha_mag * (np.abs(z) - E_ABS_Z) + fit.gamma_sign * z
        path[k] = float(np.sum(np.exp(lnh)) / n_paths)
    return path


def forecast_variance(fit, h: int, n_paths: int = EGARCH_FORECAST_PATHS, seed=SEED) -> VolForecast:
    """
    h-step conditional-variance forecasts. GARCH uses the closed recursion;
    eGARCH uses seeded Monte Carlo beyond the first step.
    """
    _check_horizon(h)
    if isinstance(fit, GarchFit):
        sigma2 = _garch_path(fit, h)
        method, paths = "recursion", 0
    elif isinstance(fit, EgarchFit):
        if n_paths < 1:
            raise InputError(f"Monte Carlo path count must be positive, got {n_paths}")
        sigma2 = _egarch_path(fit, h, n_paths, seed)
        method, paths = "monte carlo", n_paths
    else:
        raise InputError(f"cannot forecast variance from {type(fit).__name__}")
    return VolForecast(
        horizon=h,
        sigma2=tuple(float(v) for v in sigma2),
        sigma=tuple(float(np.sqrt(v)) for v in sigma2),
        method=method,
        paths=paths,
    )


def forecast_returns(arma_fit: ArmaFit | None, vol_fit, h: int, n_paths: int = EGARCH_FORECAST_PATHS,
                     seed=SEED) -> ReturnForecast:
    """
    Mean path from the ARMA forecast (or the volatility fit's stored mean)
    with sigma from the volatility forecast.
    """
    vol = forecast_variance(vol_fit, h, n_paths=n_paths, seed=seed)
    if arma_fit is not None:
        mean = arma_forecast(arma_fit, h).point
    else:
        mean = (float(vol_fit.mean),) * h
    return ReturnForecast(horizon=h, mean=tuple(mean), sigma=vol.sigma)
