# series_core/transform.py

import numpy as np

from series_core.models import Series, SeriesKind
from utils.errors import InputError


def log_returns(prices: Series) -> Series:
    """
    ln(P_t / P_{t-1}); the first date is dropped from the labels.
    """
    if prices.kind != SeriesKind.PRICE:
        raise InputError(f"log returns need a price series, got kind '{prices.kind.value}'")
    if len(prices) < 2:
        raise InputError("log returns need at least two prices")
    if np.any(prices.values <= 0):
        raise InputError(f"series '{prices.name}' has non-positive prices")
    values = np.diff(np.log(prices.values))
    labels = prices.labels[1:] if prices.labels is not None else None
    return Series(values=values, labels=labels, name=prices.name, kind=SeriesKind.LOG_RETURN)


def reconstruct_prices(first_price: float, returns: Series) -> np.ndarray:
    """
    Inverse of log_returns: P_0 followed by P_0 * exp(cumsum(r)).
    """
    return float(first_price) * np.exp(np.concatenate([[0.0], np.cumsum(returns.values)]))


def demean(s: Series, kind: SeriesKind = SeriesKind.RESIDUAL) -> Series:
    return s.with_values(s.values - s.values.mean(), kind=kind)
