# var_system/simulate.py

import numpy as np

from series_core.models import Series, SeriesKind
from utils.helpers import make_rng
from var_system.models import MultiSeries


def simulate_var(n: int, coef, intercepts=None, cov=None, names=None, burn: int = 500, seed=None) -> MultiSeries:
    """
    Gaussian VAR(p) sample; coef is a sequence of p k x k matrices.
    """
    rng = make_rng(seed)
    coef = np.asarray(coef, dtype=float)
    if coef.ndim == 2:
        coef = coef[None]
    p, k, _ = coef.shape
    c = np.zeros(k) if intercepts is None else np.asarray(intercepts, dtype=float)
    cov = np.eye(k) if cov is None else np.asarray(cov, dtype=float)
    names = names or [f"y{i + 1}" for i in range(k)]
    shocks = rng.multivariate_normal(np.zeros(k), cov, size=n + burn)
    y = np.zeros((n + burn + p, k))
    for t in range(p, n + burn + p):
        value = c + shocks[t - p]
        for i in range(1, p + 1):
            value = value + coef[i - 1] @ y[t - i]
        y[t] = value
    data = y[p + burn :]
    return MultiSeries(
        components=tuple(Series(values=data[:, i], name=names[i], kind=SeriesKind.OTHER) for i in range(k))
    )
