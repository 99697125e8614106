# garch/recursions.py
# Conditional-variance recursions and Gaussian log-likelihoods. Both return
# one value past the sample: the variance for the next, unobserved period.

import math

import numpy as np
from scipy import signal

_LOG_2PI = math.log(2.0 * math.pi)
E_ABS_Z = math.sqrt(2.0 / math.pi)


def garch_variance(u: np.ndarray, alpha0: float, alpha, beta, init: float) -> np.ndarray:
    """
    sigma^2_0..sigma^2_n for residuals u_0..u_{n-1}; pre-sample u^2 and sigma^2 equal init.
    """
    u = np.asarray(u, dtype=float)
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    n, q, p = u.size, alpha.size, beta.size
    u2 = np.r_[np.full(q, init), u * u]
    drive = np.full(n + 1, float(alpha0))
    for i in range(1, q + 1):
        drive += alpha[i - 1] * u2[q - i : q - i + n + 1]
    if p == 0:
        return drive
    den = np.r_[1.0, -beta]
    zi = signal.lfiltic([1.0], den, y=np.full(p, init))
    sigma2, _ = signal.lfilter([1.0], den, drive, zi=zi)
    return sigma2


def egarch_log_variance(u: np.ndarray, omega: float, beta: float, alpha: float, gamma: float, init: float) -> np.ndarray:
    """
    ln h_0..ln h_n with ln h_0 = ln(init).
    """
    u = np.asarray(u, dtype=float)
    n = u.size
    lnh = np.empty(n + 1)
    current = math.log(init)
    lnh[0] = current
    for t in range(n):
        z = u[t] * math.exp(-0.5 * current)
        current = omega + beta * current + alpha * (abs(z) - E_ABS_Z) + gamma * z
        lnh[t + 1] = current
    return lnh


def gaussian_loglike(u: np.ndarray, sigma2: np.ndarray) -> float:
    """-1/2 sum[ln 2pi + ln sigma_t^2 + u_t^2 / sigma_t^2] over the sample."""
    u = np.asarray(u, dtype=float)
    sigma2 = np.asarray(sigma2, dtype=float)[: u.size]
    if np.any(~np.isfinite(sigma2)) or np.any(sigma2 <= 0):
        return -np.inf
    return float(-0.5 * np.sum(_LOG_2PI + np.log(sigma2) + u * u / sigma2))
