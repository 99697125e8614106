# stattests/heteroskedasticity.py

import numpy as np

from series_core.models import Series
from stattests.distributions import chi2_sf, f_sf, t_sf_two_sided
from stattests.models import TestResult
from stattests.regression import lag_matrix, ols
from utils.errors import DegenerateDataError, InputError


def _values(s) -> np.ndarray:
    return s.values if isinstance(s, Series) else np.asarray(s, dtype=float)


def arch_lm(residuals: Series, lag: int) -> TestResult:
    """
    Engle's LM test: regress e_t^2 on a constant and `lag` lagged squares; LM = n * R^2.
    """
    e2 = _values(residuals) ** 2
    n = e2.size
    if lag < 1:
        raise InputError(f"ARCH-LM lag must be positive, got {lag}")
    if n <= 2 * lag:
        raise InputError(f"ARCH-LM with lag {lag} needs more than {2 * lag} observations, got {n}")
    if np.ptp(e2) == 0.0:
        raise DegenerateDataError("ARCH-LM: squared residuals are constant")
    y = e2[lag:]
    X = np.column_stack([np.ones(n - lag), lag_matrix(e2, lag, lag)])
    fit = ols(y, X, what="ARCH-LM regression")
    lm = fit.nobs * fit.r_squared
    return TestResult(
        name="ARCH LM",
        statistic=lm,
        p_value=chi2_sf(lm, lag),
        dof=float(lag),
        lag=lag,
        detail={"r_squared": fit.r_squared, "nobs": fit.nobs},
    )


def sign_bias(std_residuals: Series) -> list[TestResult]:
    """
    Engle-Ng regression of z_t^2 on 1, S-_{t-1}, S-_{t-1} z_{t-1}, S+_{t-1} z_{t-1}
    where S- flags a negative shock. Returns sign bias, negative size bias,
    positive size bias (t-tests) and the joint F-test, in that order.
    """
    z = _values(std_residuals)
    n = z.size
    if n < 50:
        raise InputError(f"sign bias test needs at least 50 observations, got {n}")
    lagged = z[:-1]
    negative = (lagged < 0).astype(float)
    positive = 1.0 - negative
    if negative.sum() == 0 or positive.sum() == 0:
        raise DegenerateDataError("sign bias test: lagged residuals never change sign")
    y = z[1:] ** 2
    X = np.column_stack([np.ones(n - 1), negative, negative * lagged, positive * lagged])
    full = ols(y, X, what="sign bias regression")
    restricted = ols(y, X[:, :1], what="sign bias regression")

    results = []
    names = ("Sign Bias", "Negative Size Bias", "Positive Size Bias")
    for i, name in enumerate(names, start=1):
        t = float(full.tvalues[i])
        results.append(
            TestResult(
                name=name,
                statistic=t,
                p_value=t_sf_two_sided(t, full.df_resid),
                dof=float(full.df_resid),
                detail={"coefficient": float(full.beta[i]), "std_error": float(full.std_errors[i])},
            )
        )
    f_stat = ((restricted.ssr - full.ssr) / 3.0) / (full.ssr / full.df_resid)
    results.append(
        TestResult(
            name="Joint Effect",
            statistic=f_stat,
            p_value=f_sf(f_stat, 3, full.df_resid),
            dof=(3.0, float(full.df_resid)),
            detail={"ssr_restricted": restricted.ssr, "ssr_full": full.ssr},
        )
    )
    return results
