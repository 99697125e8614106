# stattests/distributions.py
# Distribution evaluations used by the tests; all p-values are clipped to [0, 1].

import numpy as np
from scipy import special


def _clip(p) -> float:
    return float(np.clip(p, 0.0, 1.0))


def norm_cdf(x: float) -> float:
    return _clip(special.ndtr(x))


def norm_pdf(x: float) -> float:
    return float(np.exp(-0.5 * x * x) / np.sqrt(2.0 * np.pi))


def norm_ppf(p: float) -> float:
    return float(special.ndtri(p))


def chi2_sf(x: float, df: float) -> float:
    """Upper-tail chi-square probability (regularized upper incomplete gamma)."""
    if x <= 0:
        return 1.0
    return _clip(special.gammaincc(df / 2.0, x / 2.0))


def f_sf(x: float, df1: float, df2: float) -> float:
    """Upper-tail F probability (regularized incomplete beta)."""
    if x <= 0:
        return 1.0
    return _clip(special.betainc(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * x)))


def t_sf_two_sided(t: float, df: float) -> float:
    return _clip(special.betainc(df / 2.0, 0.5, df / (df + t * t)))
