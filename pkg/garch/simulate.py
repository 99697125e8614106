# garch/simulate.py

import math

import numpy as np

from garch.recursions import E_ABS_Z
from series_core.models import Series, SeriesKind
from utils.helpers import make_rng


def simulate_garch(n: int, alpha0: float, alpha=(0.1,), beta=(0.85,), burn: int = 500, seed=None) -> Series:
    """
    Gaussian GARCH(p, q) returns; the recursion starts at the unconditional variance.
    """
    rng = make_rng(seed)
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    q, p = alpha.size, beta.size
    persistence = alpha.sum() + beta.sum()
    start = alpha0 / (1.0 - persistence) if persistence < 1 else alpha0
    total = n + burn
    z = rng.standard_normal(total)
    u2 = [start] * q
    var = [start] * p
    out = np.empty(total)
    for t in range(total):
        sigma2 = alpha0
        for i in range(1, q + 1):
            sigma2 += alpha[i - 1] * u2[-i]
        for j in range(1, p + 1):
            sigma2 += beta[j - 1] * var[-j]
        out[t] = math.sqrt(sigma2) * z[t]
        u2.append(out[t] * out[t])
        var.append(sigma2)
    return Series(values=out[burn:], name="simulated garch", kind=SeriesKind.LOG_RETURN)


def simulate_egarch(n: int, omega: float, beta: float, alpha: float, gamma: float, burn: int = 500,
                    seed=None) -> Series:
    rng = make_rng(seed)
    total = n + burn
    z = rng.standard_normal(total)
    lnh = omega / (1.0 - beta)
    out = np.empty(total)
    for t in range(total):
        out[t] = math.exp(0.5 * lnh) * z[t]
        lnh = omega + beta * lnh + alpha * (abs(z[t]) - E_ABS_Z) + gamma * z[t]
    return Series(values=out[burn:], name="simulated egarch", kind=SeriesKind.LOG_RETURN)
