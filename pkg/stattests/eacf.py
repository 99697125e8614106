# stattests/eacf.py

"""
Extended autocorrelation function (Tsay-Tiao).

For AR order j and MA order k, fit the k-th iterated AR(j) regression:
regress z_t on z_{t-1..t-j} plus the lagged residuals of the earlier
iterations e^(k-l)_{t-l}, l = 1..k. Filter the series with the resulting AR
coefficients and take the lag-(k+1) sample autocorrelation of the filtered
series. Cells whose magnitude exceeds 2/sqrt(n) are marked "x".
"""

import numpy as np

from series_core.describe import autocorrelations
from series_core.models import Series
from stattests.models import EacfTable
from stattests.regression import ols
from utils.errors import InputError


def _filtered(z: np.ndarray, phi: np.ndarray) -> np.ndarray:
    j = len(phi)
    w = z[j:].copy()
    for i in range(1, j + 1):
        w -= phi[i - 1] * z[j - i : z.size - i]
    return w


def _lag_k_acf(w: np.ndarray, lag: int) -> float:
    if lag >= w.size:
        return 0.0
    return float(autocorrelations(w, lag)[-1])


def eacf_values(z: np.ndarray, p_max: int, q_max: int) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    z = z - z.mean()
    n = z.size
    table = np.zeros((p_max + 1, q_max + 1))
    table[0, :] = autocorrelations(z, q_max + 1)
    for j in range(1, p_max + 1):
        residuals = []  # residual series of iterations 0..k-1, full length with NaN pre-sample
        for k in range(q_max + 1):
            start = j + k
            columns = [z[start - i : n - i] for i in range(1, j + 1)]
            for l in range(1, k + 1):
                columns.append(residuals[k - l][start - l : n - l])
            X = np.column_stack(columns)
            fit = ols(z[start:], X, what=f"EACF iterated AR({j}) regression {k}")
            resid = np.full(n, np.nan)
            resid[start:] = fit.resid
            residuals.append(resid)
            table[j, k] = _lag_k_acf(_filtered(z, fit.beta[:j]), k + 1)
    return table


def eacf(s: Series, p_max: int = 7, q_max: int = 13) -> EacfTable:
    z = s.values if isinstance(s, Series) else np.asarray(s, dtype=float)
    n = z.size
    if p_max < 0 or q_max < 0:
        raise InputError("EACF maxima must be non-negative")
    if n <= 4 * (p_max + q_max):
        raise InputError(f"EACF grid ({p_max}, {q_max}) needs more than {4 * (p_max + q_max)} observations")
    values = eacf_values(z, p_max, q_max)
    threshold = 2.0 / np.sqrt(n)
    symbols = tuple(tuple("x" if abs(v) > threshold else "o" for v in row) for row in values)
    return EacfTable(
        symbols=symbols,
        sample_size=n,
        values=tuple(tuple(float(v) for v in row) for row in values),
    )
