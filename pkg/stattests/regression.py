# stattests/regression.py

"""
Ordinary least squares used by the ADF, ARCH-LM, sign-bias, EACF and VAR code.
"""

from dataclasses import dataclass

import numpy as np

from utils.errors import DegenerateDataError


@dataclass
class OlsResult:
    beta: np.ndarray
    resid: np.ndarray
    ssr: float
    std_errors: np.ndarray
    tvalues: np.ndarray
    r_squared: float
    df_resid: int
    nobs: int


def ols(y: np.ndarray, X: np.ndarray, what: str = "regression") -> OlsResult:
    """
    QR-based least squares; perfectly collinear regressors raise DegenerateDataError.
    """
    y = np.asarray(y, dtype=float)
    X = np.asarray(X, dtype=float)
    n, k = X.shape
    if n <= k:
        raise DegenerateDataError(f"{what}: {n} observations for {k} regressors")
    if np.linalg.matrix_rank(X) < k:
        raise DegenerateDataError(f"{what}: regressors are perfectly collinear")
    Q, R = np.linalg.qr(X)
    beta = np.linalg.solve(R, Q.T @ y)
    resid = y - X @ beta
    ssr = float(resid @ resid)
    df_resid = n - k
    sigma2 = ssr / df_resid
    R_inv = np.linalg.inv(R)
    cov = sigma2 * (R_inv @ R_inv.T)
    std_errors = np.sqrt(np.diag(cov))
    with np.errstate(divide="ignore", invalid="ignore"):
        tvalues = beta / std_errors
    centered = y - y.mean()
    sst = float(centered @ centered)
    r_squared = 1.0 - ssr / sst if sst > 0 else 0.0
    return OlsResult(
        beta=beta,
        resid=resid,
        ssr=ssr,
        std_errors=std_errors,
        tvalues=tvalues,
        r_squared=r_squared,
        df_resid=df_resid,
        nobs=n,
    )


def lag_matrix(x: np.ndarray, lags: int, start: int) -> np.ndarray:
    """
    Columns x_{t-1}..x_{t-lags} for t = start..len(x)-1.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    return np.column_stack([x[start - i : n - i] for i in range(1, lags + 1)]) if lags else np.empty((n - start, 0))
