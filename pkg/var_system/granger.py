# var_system/granger.py

import sys

import numpy as np
from tqdm import tqdm

from stattests.distributions import f_sf
from stattests.models import TestResult
from stattests.regression import lag_matrix, ols
from utils.errors import InputError
from utils.logger import setup_logger
from var_system.models import GrangerRow, MultiSeries

logger = setup_logger(__name__)


def significance_stars(p_value: float) -> str:
    if p_value < 0.01:
        return "***"
    if p_value < 0.05:
        return "**"
    if p_value < 0.10:
        return "*"
    return ""


def granger_test(m: MultiSeries, cause: str, effect: str, p: int) -> TestResult:
    """
    F test of whether p lags of `cause` improve the regression of `effect` on
    a constant and its own p lags.
    """
    if cause == effect:
        raise InputError("cause and effect must be different components")
    if p < 1:
        raise InputError(f"Granger lag order must be positive, got {p}")
    x = m.components[m.index_of(cause)].values
    y = m.components[m.index_of(effect)].values
    n = y.size
    if n <= 2 * p + 10:
        raise InputError(f"Granger test with {p} lags needs more than {2 * p + 10} observations, got {n}")

    target = y[p:]
    own = np.column_stack([np.ones(n - p), lag_matrix(y, p, p)])
    full = np.column_stack([own, lag_matrix(x, p, p)])
    restricted = ols(target, own, what=f"Granger restricted regression of {effect}")
    unrestricted = ols(target, full, what=f"Granger regression of {effect} on {cause}")
    df_resid = unrestricted.df_resid
    f_stat = ((restricted.ssr - unrestricted.ssr) / p) / (unrestricted.ssr / df_resid)
    return TestResult(
        name="Granger causality",
        statistic=f_stat,
        p_value=f_sf(f_stat, p, df_resid),
        dof=(float(p), float(df_resid)),
        lag=p,
        detail={"cause": cause, "effect": effect, "nobs": unrestricted.nobs},
    )


def granger_table(m: MultiSeries, p: int) -> list[GrangerRow]:
    """Every ordered (cause, effect) pair of components."""
    pairs = [(cause, effect) for cause in m.names for effect in m.names if cause != effect]
    rows = []
    for cause, effect in tqdm(pairs, desc="Granger pairs", unit="pair", disable=not sys.stderr.isatty()):
        result = granger_test(m, cause, effect, p)
        rows.append(GrangerRow(cause=cause, effect=effect, result=result, stars=significance_stars(result.p_value)))
    logger.info(f"🔗 Granger table: {sum(1 for r in rows if r.stars)} of {len(rows)} pairs significant at 10%")
    return rows
