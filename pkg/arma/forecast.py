# arma/forecast.py

import numpy as np
from scipy import signal

from arma.models import ArmaFit, ForecastEvaluation, ForecastPath
from config import MAX_HORIZON
from utils.errors import InputError


def psi_weights(ar, ma, count: int) -> np.ndarray:
    """
    psi_0..psi_{count-1} of the MA(infinity) representation:
    psi_j = theta_j + sum_i phi_i psi_{j-i}, psi_0 = 1.
    """
    return signal.lfilter(np.r_[1.0, np.asarray(ma, dtype=float)], np.r_[1.0, -np.asarray(ar, dtype=float)],
                          signal.unit_impulse(count))


def _check_horizon(h: int):
    if not 1 <= h <= MAX_HORIZON:
        raise InputError(f"forecast horizon must be in 1..{MAX_HORIZON}, got {h}")


def forecast(fit: ArmaFit, h: int) -> ForecastPath:
    """
    h-step point forecasts with future innovations set to zero, and their
    standard errors sqrt(sigma2 * sum_{j<h} psi_j^2).
    """
    _check_horizon(h)
    if fit.series is None:
        raise InputError("forecasting needs the fitted series attached to the fit")
    ar = np.asarray(fit.ar)
    ma = np.asarray(fit.ma)
    p, q = ar.size, ma.size
    deviations = list(fit.series.values - fit.mean_c)
    eps = fit.residuals.values
    n = len(deviations)

    point = []
    for step in range(1, h + 1):
        t = n + step - 1  # index of the forecast target
        dev = 0.0
        for i in range(1, p + 1):
            dev += ar[i - 1] * deviations[t - i]
        for j in range(step, q + 1):
            dev += ma[j - 1] * eps[t - j]
        deviations.append(dev)
        point.append(fit.mean_c + dev)

    psi = psi_weights(ar, ma, h)
    std_err = np.sqrt(fit.sigma2 * np.cumsum(psi**2))
    return ForecastPath(
        horizon=h,
        point=tuple(float(v) for v in point),
        std_err=tuple(float(v) for v in std_err),
        psi=tuple(float(v) for v in psi),
    )


def evaluate_forecast(path: ForecastPath, actual) -> ForecastEvaluation:
    """Per-step errors (actual - forecast), RMSE and MAE."""
    actual = np.asarray(getattr(actual, "values", actual), dtype=float).reshape(-1)
    if actual.size != path.horizon:
        raise InputError(f"need {path.horizon} realised values, got {actual.size}")
    predicted = np.asarray(path.point)
    errors = actual - predicted
    return ForecastEvaluation(
        actual=tuple(float(v) for v in actual),
        predicted=tuple(float(v) for v in predicted),
        errors=tuple(float(v) for v in errors),
        rmse=float(np.sqrt(np.mean(errors**2))),
        mae=float(np.mean(np.abs(errors))),
    )
