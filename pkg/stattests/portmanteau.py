# stattests/portmanteau.py

"""
Ljung-Box and Box-Pierce portmanteau statistics.

    Q_LB = n (n + 2) sum_{k=1..m} r_k^2 / (n - k)
    Q_BP = n sum_{k=1..m} r_k^2

Both are chi-square with m - fitdf degrees of freedom under the null.
"""

import numpy as np

from series_core.describe import autocorrelations
from series_core.models import Series
from stattests.distributions import chi2_sf
from stattests.models import TestResult
from utils.errors import InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def _check(n: int, lag: int, fitdf: int):
    if lag < 1:
        raise InputError(f"lag must be positive, got {lag}")
    if fitdf < 0:
        raise InputError(f"fitdf must be non-negative, got {fitdf}")
    if lag <= fitdf:
        raise InputError(f"lag {lag} must exceed fitdf {fitdf}")
    if not lag < n / 2:
        raise InputError(f"lag {lag} must be below n/2 = {n / 2}")


def _values(s) -> np.ndarray:
    return s.values if isinstance(s, Series) else np.asarray(s, dtype=float)


def ljung_box(s: Series, lag: int, fitdf: int = 0) -> TestResult:
    x = _values(s)
    n = x.size
    _check(n, lag, fitdf)
    r = autocorrelations(x, lag)
    k = np.arange(1, lag + 1)
    q = float(n * (n + 2) * np.sum(r**2 / (n - k)))
    dof = lag - fitdf
    return TestResult(name="Ljung-Box", statistic=q, p_value=chi2_sf(q, dof), dof=float(dof), lag=lag,
                      detail={"fitdf": fitdf})


def box_pierce(s: Series, lag: int, fitdf: int = 0) -> TestResult:
    x = _values(s)
    n = x.size
    _check(n, lag, fitdf)
    r = autocorrelations(x, lag)
    q = float(n * np.sum(r**2))
    dof = lag - fitdf
    return TestResult(name="Box-Pierce", statistic=q, p_value=chi2_sf(q, dof), dof=float(dof), lag=lag,
                      detail={"fitdf": fitdf})


def portmanteau_table(s: Series, lags, fitdf: int = 0, method: str = "ljung_box") -> list[TestResult]:
    """
    One test per lag, skipping lags that do not exceed fitdf.
    """
    test = {"ljung_box": ljung_box, "box_pierce": box_pierce}[method]
    results = []
    for lag in lags:
        if lag <= fitdf:
            logger.warning(f"Skipping {method} at lag {lag}: needs lag > fitdf={fitdf}")
            continue
        results.append(test(s, lag, fitdf))
    return results


def generalized_box(z: Series, lags=(6, 12, 18), fitdf: int = 0) -> dict[str, list[TestResult]]:
    """
    Multi-lag Ljung-Box on standardized residuals and on their squares.
    """
    x = _values(z)
    return {
        "levels": portmanteau_table(x, lags, fitdf=0),
        "squares": portmanteau_table(x**2, lags, fitdf=fitdf),
    }
