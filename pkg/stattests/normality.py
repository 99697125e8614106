# stattests/normality.py

import numpy as np
from scipy import stats

from series_core.describe import summary_stats
from series_core.models import Series
from stattests.distributions import chi2_sf, norm_ppf
from stattests.models import TestResult
from utils.errors import DegenerateDataError, InputError


def _values(s) -> np.ndarray:
    return s.values if isinstance(s, Series) else np.asarray(s, dtype=float)


def jarque_bera(s: Series) -> TestResult:
    """
    JB = n/6 * (S^2 + (K - 3)^2 / 4) with moment skewness S and kurtosis K.
    """
    x = _values(s)
    n = x.size
    if n < 8:
        raise InputError(f"Jarque-Bera needs at least 8 observations, got {n}")
    moments = summary_stats(x)
    skew = moments.skewness
    excess = moments.excess_kurtosis
    jb = n / 6.0 * (skew**2 + excess**2 / 4.0)
    return TestResult(
        name="Jarque-Bera",
        statistic=jb,
        p_value=chi2_sf(jb, 2),
        dof=2.0,
        detail={"skewness": skew, "kurtosis": excess + 3.0},
    )


def shapiro_wilk(s: Series) -> TestResult:
    """
    W statistic with the AS R94 normalizing approximation (scipy's swilk).
    """
    x = _values(s)
    n = x.size
    if not 3 <= n <= 5000:
        raise InputError(f"Shapiro-Wilk needs 3 <= n <= 5000, got {n}")
    if np.ptp(x) == 0.0:
        raise DegenerateDataError("Shapiro-Wilk on a zero-variance sample")
    w, p_value = stats.shapiro(x)
    return TestResult(name="Shapiro-Wilk", statistic=float(w), p_value=float(np.clip(p_value, 0.0, 1.0)),
                      detail={"n": n})


def pearson_gof(std_residuals: Series, n_bins: int = 20) -> TestResult:
    """
    Chi-square goodness of fit against the standard normal with equiprobable bins.
    """
    z = _values(std_residuals)
    n = z.size
    if n_bins < 4:
        raise InputError(f"Pearson goodness of fit needs at least 4 bins, got {n_bins}")
    if n < 5 * n_bins:
        raise InputError(f"{n_bins} bins are too fine for {n} observations (need n >= {5 * n_bins})")
    inner_edges = np.array([norm_ppf(i / n_bins) for i in range(1, n_bins)])
    observed = np.bincount(np.searchsorted(inner_edges, z, side="right"), minlength=n_bins)
    expected = np.full(n_bins, n / n_bins)
    chi2 = float(np.sum((observed - expected) ** 2 / expected))
    dof = n_bins - 1
    return TestResult(
        name="Pearson goodness of fit",
        statistic=chi2,
        p_value=chi2_sf(chi2, dof),
        dof=float(dof),
        detail={"observed": observed.tolist(), "expected": expected.tolist()},
    )
