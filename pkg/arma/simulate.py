# arma/simulate.py

import numpy as np
from scipy import signal

from series_core.models import Series, SeriesKind
from utils.helpers import make_rng


def simulate_arma(n: int, ar=(), ma=(), sigma2: float = 1.0, mean: float = 0.0, burn: int = 500, seed=None) -> Series:
    """
    Gaussian ARMA sample of length n; the first `burn` draws are discarded.
    """
    rng = make_rng(seed)
    eps = rng.normal(0.0, np.sqrt(sigma2), size=n + burn)
    x = signal.lfilter(np.r_[1.0, np.asarray(ma, dtype=float)], np.r_[1.0, -np.asarray(ar, dtype=float)], eps)
    return Series(values=mean + x[burn:], name="simulated arma", kind=SeriesKind.LOG_RETURN)
