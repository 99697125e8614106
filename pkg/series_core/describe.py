# series_core/describe.py

"""
Descriptive statistics and sample autocorrelations.

The autocorrelation estimator is the biased one: full-sample mean and
denominator n, which keeps the sequence positive semi-definite and is the
convention the portmanteau statistics are built on.
"""

import numpy as np
from scipy import stats

from series_core.models import CorrelogramRow, Histogram, Series, SummaryStats
from utils.errors import DegenerateDataError, InputError


def _as_array(s) -> np.ndarray:
    return s.values if isinstance(s, Series) else np.asarray(s, dtype=float)


def summary_stats(s: Series) -> SummaryStats:
    x = _as_array(s)
    if x.size < 2:
        raise InputError("summary statistics need at least two observations")
    centered = x - x.mean()
    m2 = np.mean(centered**2)
    if m2 == 0.0:
        raise DegenerateDataError(
            f"zero variance (all values equal {x[0]!r}): skewness and kurtosis are undefined"
        )
    return SummaryStats(
        n=int(x.size),
        mean=float(x.mean()),
        std_dev=float(x.std(ddof=1)),
        min=float(x.min()),
        max=float(x.max()),
        skewness=float(stats.skew(x, bias=True)),
        excess_kurtosis=float(stats.kurtosis(x, fisher=True, bias=True)),
    )


def autocorrelations(x, max_lag: int) -> np.ndarray:
    """
    r_1..r_max_lag of x (lag 0 is implicitly 1 and not returned).
    """
    x = _as_array(x)
    centered = x - x.mean()
    denom = np.dot(centered, centered)
    if denom == 0.0:
        raise DegenerateDataError("autocorrelations of a zero-variance series are undefined")
    n = x.size
    return np.array([np.dot(centered[: n - k], centered[k:]) / denom for k in range(1, max_lag + 1)])


def partial_autocorrelations(acf: np.ndarray) -> np.ndarray:
    """
    Durbin-Levinson recursion from r_1..r_m to the partial autocorrelations.
    """
    m = len(acf)
    pacf = np.zeros(m)
    phi = np.zeros(m)
    variance = 1.0
    for k in range(m):
        if k == 0:
            reflection = acf[0]
        else:
            reflection = (acf[k] - np.dot(phi[:k], acf[k - 1 :: -1][:k])) / variance
        updated = phi[:k] - reflection * phi[:k][::-1]
        phi[:k] = updated
        phi[k] = reflection
        pacf[k] = reflection
        variance *= 1.0 - reflection**2
    return pacf


def correlogram(s: Series, max_lag: int) -> list[CorrelogramRow]:
    x = _as_array(s)
    n = x.size
    if max_lag < 1 or not max_lag < n / 2:
        raise InputError(f"max_lag must be in [1, {n / 2}) for n={n}, got {max_lag}")
    acf = autocorrelations(x, max_lag)
    pacf = partial_autocorrelations(acf)
    band = 1.96 / np.sqrt(n)
    return [
        CorrelogramRow(lag=k + 1, acf=float(acf[k]), pacf=float(pacf[k]), conf_band=float(band))
        for k in range(max_lag)
    ]


def histogram(s: Series, bins: int = 30) -> Histogram:
    counts, edges = np.histogram(_as_array(s), bins=bins)
    return Histogram(edges=tuple(float(e) for e in edges), counts=tuple(int(c) for c in counts))


def qq_pairs(s: Series) -> list[tuple[float, float]]:
    """
    (theoretical normal quantile, sorted sample value) pairs.
    """
    x = np.sort(_as_array(s))
    n = x.size
    a = 3.0 / 8.0 if n <= 10 else 0.5
    positions = (np.arange(1, n + 1) - a) / (n + 1 - 2 * a)
    theoretical = stats.norm.ppf(positions)
    return [(float(q), float(v)) for q, v in zip(theoretical, x)]
