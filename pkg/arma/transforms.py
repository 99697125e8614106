# arma/transforms.py

"""
Map unconstrained reals to stationary AR coefficient vectors and back.

Each coordinate goes through tanh to a partial autocorrelation in (-1, 1);
the Durbin-Levinson recursion then builds the AR coefficients. Any real
vector therefore yields a polynomial 1 - phi_1 z - ... - phi_m z^m with all
roots outside the unit circle. MA coefficients use the negated map so that
1 + theta_1 z + ... + theta_m z^m is invertible.
"""

import numpy as np

_MAX_PACF = 1.0 - 1e-8


def pacf_to_ar(r: np.ndarray) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    phi = np.zeros(r.size)
    for k in range(r.size):
        previous = phi[:k].copy()
        phi[:k] = previous - r[k] * previous[::-1]
        phi[k] = r[k]
    return phi


def ar_to_pacf(phi: np.ndarray) -> np.ndarray:
    """Backward Durbin-Levinson; inverse of pacf_to_ar for stationary phi."""
    phi = np.asarray(phi, dtype=float).copy()
    m = phi.size
    r = np.zeros(m)
    for k in range(m, 0, -1):
        rk = phi[k - 1]
        r[k - 1] = rk
        if k > 1:
            if abs(rk) >= 1.0:
                raise ValueError("AR coefficients are not stationary")
            head = phi[: k - 1]
            phi[: k - 1] = (head + rk * head[::-1]) / (1.0 - rk * rk)
    return r


def constrain_ar(u: np.ndarray) -> np.ndarray:
    return pacf_to_ar(np.tanh(np.asarray(u, dtype=float)))


def unconstrain_ar(phi: np.ndarray) -> np.ndarray:
    r = np.clip(ar_to_pacf(phi), -_MAX_PACF, _MAX_PACF)
    return np.arctanh(r)


def constrain_ma(u: np.ndarray) -> np.ndarray:
    return -constrain_ar(u)


def unconstrain_ma(theta: np.ndarray) -> np.ndarray:
    return unconstrain_ar(-np.asarray(theta, dtype=float))


def max_root_modulus(coeffs: np.ndarray) -> float:
    """
    Largest modulus of the roots of z^m - c_1 z^(m-1) - ... - c_m, i.e. the
    inverse roots of 1 - c_1 z - ... - c_m z^m. Below 1 means stationary.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.size == 0 or not np.any(coeffs):
        return 0.0
    return float(np.max(np.abs(np.roots(np.r_[1.0, -coeffs]))))


def is_stationary(phi: np.ndarray) -> bool:
    return max_root_modulus(phi) < 1.0


def is_invertible(theta: np.ndarray, strict: bool = False) -> bool:
    modulus = max_root_modulus(-np.asarray(theta, dtype=float))
    return modulus < 1.0 if strict else modulus <= 1.0 + 1e-10
