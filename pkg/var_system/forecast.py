# var_system/forecast.py

import numpy as np

from config import MAX_HORIZON
from utils.errors import InputError
from var_system.models import VarFit, VarForecast


def var_forecast(fit: VarFit, h: int) -> VarForecast:
    """
    Iterated forecasts y_{t+k} = c + sum_i A_i y_{t+k-i}, observed values
    used where available.
    """
    if not 1 <= h <= MAX_HORIZON:
        raise InputError(f"forecast horizon must be in 1..{MAX_HORIZON}, got {h}")
    p = fit.lag_order
    history = [row for row in fit.data[-p:]]
    values = np.empty((h, fit.k))
    for step in range(h):
        nxt = fit.intercepts.copy()
        for i in range(1, p + 1):
            nxt = nxt + fit.coef[i - 1] @ history[-i]
        values[step] = nxt
        history.append(nxt)
    return VarForecast(horizon=h, names=fit.names, values=values)
