# arma/likelihood.py

"""
Exact Gaussian ARMA likelihood by the prediction error decomposition.

The zero-mean ARMA(p, q) process is cast in state-space form with
r = max(p, q + 1) states:

    alpha_{t+1} = T alpha_t + R eps_{t+1},    x_t = alpha_t[0]

with the AR coefficients down the first column of T, ones on its
superdiagonal and R = (1, theta_1, ..., theta_{r-1}). The filter starts from
the stationary state covariance (discrete Lyapunov equation) and runs with
unit innovation variance, so F_t is the prediction error variance in units
of sigma^2. Once F_t has settled at 1 for long enough the filter equals the
plain ARMA residual recursion and the rest of the sample is filtered with
lfilter.
"""

import numpy as np
from scipy import signal
from scipy.linalg import solve_discrete_lyapunov

_LOG_2PI = np.log(2.0 * np.pi)
_STEADY_TOL = 1e-13


def state_space(ar: np.ndarray, ma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ar = np.asarray(ar, dtype=float)
    ma = np.asarray(ma, dtype=float)
    r = max(ar.size, ma.size + 1)
    T = np.zeros((r, r))
    T[: ar.size, 0] = ar
    T[:-1, 1:] = np.eye(r - 1)
    R = np.zeros(r)
    R[0] = 1.0
    R[1 : ma.size + 1] = ma
    return T, R


def innovations(x: np.ndarray, ar, ma) -> tuple[np.ndarray, np.ndarray]:
    """
    One-step prediction errors v_t and their relative variances F_t for a
    zero-mean series x.
    """
    x = np.asarray(x, dtype=float)
    ar = np.asarray(ar, dtype=float)
    ma = np.asarray(ma, dtype=float)
    n = x.size
    p, q = ar.size, ma.size
    v = np.empty(n)
    F = np.ones(n)
    if not (np.any(ar) or np.any(ma)):
        v[:] = x
        return v, F

    T, R = state_space(ar, ma)
    Q = np.outer(R, R)
    P = solve_discrete_lyapunov(T, Q)
    a = np.zeros(T.shape[0])
    settle = max(q, 1)
    steady = 0
    t = 0
    while t < n:
        f = P[0, 0]
        e = x[t] - a[0]
        v[t] = e
        F[t] = f
        t += 1
        steady = steady + 1 if abs(f - 1.0) < _STEADY_TOL else 0
        if steady >= settle and t >= max(p, q):
            break
        gain = (T @ P[:, 0]) / f
        a = T @ a + gain * e
        P = T @ P @ T.T + Q - np.outer(gain, gain) * f

    if t < n:
        b = np.r_[1.0, -ar]
        den = np.r_[1.0, ma]
        zi = signal.lfiltic(b, den, y=v[t - 1 :: -1][:q], x=x[t - 1 :: -1][:p])
        v[t:], _ = signal.lfilter(b, den, x[t:], zi=zi)
    return v, F


def concentrated_loglike(z: np.ndarray, ar, ma) -> tuple[float, float]:
    """
    Log-likelihood of a zero-mean series maximized over sigma^2, and the
    maximizing sigma^2.
    """
    v, F = innovations(z, ar, ma)
    if np.any(F <= 0):
        return -np.inf, np.nan
    n = z.size
    sigma2 = float(np.mean(v * v / F))
    if sigma2 <= 0:
        return -np.inf, np.nan
    ll = -0.5 * n * (_LOG_2PI + np.log(sigma2) + 1.0) - 0.5 * float(np.sum(np.log(F)))
    return float(ll), sigma2


def exact_loglike(x: np.ndarray, mean: float, ar, ma, sigma2: float) -> float:
    """Full Gaussian log-likelihood of x under ARMA(mean, ar, ma, sigma2)."""
    if sigma2 <= 0:
        return -np.inf
    v, F = innovations(np.asarray(x, dtype=float) - mean, ar, ma)
    scaled = sigma2 * F
    return float(-0.5 * np.sum(_LOG_2PI + np.log(scaled) + v * v / scaled))
