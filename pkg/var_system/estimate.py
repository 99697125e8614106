# var_system/estimate.py

import numpy as np

from series_core.models import SeriesKind
from stattests.regression import ols
from utils.errors import DegenerateDataError, InputError
from utils.logger import setup_logger
from var_system.models import MultiSeries, VarFit

logger = setup_logger(__name__)


def var_regressors(y: np.ndarray, p: int) -> np.ndarray:
    """
    Rows [1, y_{t-1}', ..., y_{t-p}'] for t = p..n-1.
    """
    n = y.shape[0]
    blocks = [np.ones((n - p, 1))] + [y[p - i : n - i] for i in range(1, p + 1)]
    return np.hstack(blocks)


def companion_matrix(coef: np.ndarray) -> np.ndarray:
    """
    [[A_1 A_2 ... A_p], [I 0 ... 0], ..., [0 ... I 0]] of size kp x kp.
    """
    p, k, _ = coef.shape
    top = np.hstack(list(coef))
    if p == 1:
        return top.copy()
    bottom = np.hstack([np.eye(k * (p - 1)), np.zeros((k * (p - 1), k))])
    return np.vstack([top, bottom])


def fit_var(m: MultiSeries, p: int) -> VarFit:
    """
    Equation-by-equation OLS of a VAR(p) with intercept.
    """
    if p < 1:
        raise InputError(f"VAR lag order must be positive, got {p}")
    k, n = m.k, m.n
    if n <= k * p + 10:
        raise InputError(f"VAR({p}) with {k} variables needs more than {k * p + 10} observations, got {n}")
    if any(c.kind == SeriesKind.PRICE for c in m.components):
        logger.warning("⚠️ Fitting a VAR on price levels; stability roots will show the consequence")

    y = m.matrix()
    X = var_regressors(y, p)
    if np.linalg.matrix_rank(X) < X.shape[1]:
        raise DegenerateDataError(f"VAR({p}) regressors are singular (collinear or constant components)")

    Y = y[p:]
    betas, resids, ses = [], [], []
    for i, name in enumerate(m.names):
        fit = ols(Y[:, i], X, what=f"VAR equation '{name}'")
        betas.append(fit.beta)
        resids.append(fit.resid)
        ses.append(fit.std_errors)
    B = np.column_stack(betas)          # (1 + kp, k)
    residuals = np.column_stack(resids)
    n_eff = Y.shape[0]
    dof = n_eff - (k * p + 1)
    resid_cov = residuals.T @ residuals / dof
    resid_cov = 0.5 * (resid_cov + resid_cov.T)

    coef = np.stack([B[1 + i * k : 1 + (i + 1) * k].T for i in range(p)])
    fit = VarFit(
        lag_order=p,
        names=m.names,
        intercepts=B[0].copy(),
        coef=coef,
        resid_cov=resid_cov,
        companion=companion_matrix(coef),
        n_effective=n_eff,
        residuals=residuals,
        data=y,
        std_errors=np.column_stack(ses),
    )
    logger.info(f"✅ VAR({p}) fitted on {k} variables, {n_eff} effective observations")
    return fit
