# stattests/unit_root.py

"""
Augmented Dickey-Fuller test with a constant and no trend:

    dx_t = c + rho * x_{t-1} + sum_i delta_i dx_{t-i} + e_t

The statistic is the OLS t-ratio on rho. The p-value is interpolated from
the Dickey-Fuller critical values of the constant-only case, first across
sample sizes and then across percentiles, and clipped to [0.01, 0.99].
"""

import numpy as np

from series_core.models import Series
from stattests.models import TestResult
from stattests.regression import lag_matrix, ols
from utils.errors import InputError

# Rows: sample size; columns: percentiles below.
_DF_PERCENTILES = np.array([0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99])
_DF_SAMPLE_SIZES = np.array([25.0, 50.0, 100.0, 250.0, 500.0, 100000.0])
_DF_TABLE = np.array(
    [
        [-3.75, -3.33, -3.00, -2.63, -0.37, 0.00, 0.34, 0.72],
        [-3.58, -3.22, -2.93, -2.60, -0.40, -0.03, 0.29, 0.66],
        [-3.51, -3.17, -2.89, -2.58, -0.42, -0.05, 0.26, 0.63],
        [-3.46, -3.14, -2.88, -2.57, -0.42, -0.06, 0.24, 0.62],
        [-3.44, -3.13, -2.87, -2.57, -0.43, -0.07, 0.24, 0.61],
        [-3.43, -3.12, -2.86, -2.57, -0.44, -0.07, 0.23, 0.60],
    ]
)


def df_critical_values(nobs: int) -> np.ndarray:
    """Critical values at _DF_PERCENTILES for a regression with nobs observations."""
    return np.array([np.interp(nobs, _DF_SAMPLE_SIZES, _DF_TABLE[:, j]) for j in range(_DF_TABLE.shape[1])])


def df_pvalue(statistic: float, nobs: int) -> tuple[float, str | None]:
    """Interpolated p-value and which clip was applied, if any."""
    critical = df_critical_values(nobs)
    if statistic < critical[0]:
        return 0.01, "smaller"
    if statistic > critical[-1]:
        return 0.99, "greater"
    return float(np.interp(statistic, critical, _DF_PERCENTILES)), None


def adf_test(s: Series, lag_p: int) -> TestResult:
    x = s.values if isinstance(s, Series) else np.asarray(s, dtype=float)
    n = x.size
    if lag_p < 0:
        raise InputError(f"ADF lag must be non-negative, got {lag_p}")
    if n <= lag_p + 10:
        raise InputError(f"ADF with {lag_p} lags needs more than {lag_p + 10} observations, got {n}")

    dx = np.diff(x)
    # Regression rows t = lag_p..len(dx)-1 in difference indexing
    y = dx[lag_p:]
    level = x[lag_p : n - 1]
    X = np.column_stack([np.ones_like(y), level, lag_matrix(dx, lag_p, lag_p)])
    fit = ols(y, X, what="ADF regression")
    statistic = float(fit.tvalues[1])
    p_value, clipped = df_pvalue(statistic, fit.nobs)

    detail = {"regression": "constant", "nobs": fit.nobs, "rho": float(fit.beta[1])}
    if clipped == "smaller":
        detail["p_value_note"] = "p-value smaller than printed p-value"
    elif clipped == "greater":
        detail["p_value_note"] = "p-value greater than printed p-value"
    return TestResult(
        name="Augmented Dickey-Fuller",
        statistic=statistic,
        p_value=p_value,
        dof=None,
        lag=lag_p,
        detail=detail,
    )
