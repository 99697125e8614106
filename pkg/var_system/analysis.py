# var_system/analysis.py

"""
Stability roots, orthogonalized impulse responses and forecast error
variance decomposition of a fitted VAR.

Moving-average matrices: Phi_0 = I, Phi_h = sum_{i=1..min(h,p)} Phi_{h-i} A_i.
Orthogonalized responses: Theta_h = Phi_h L with L the lower Cholesky factor
of the residual covariance in the chosen variable ordering.
"""

import numpy as np

from utils.errors import DegenerateDataError, InputError
from var_system.models import FevdTable, ImpulseResponse, StabilityReport, VarFit


def stability_roots(fit: VarFit) -> StabilityReport:
    eigenvalues = np.linalg.eigvals(fit.companion)
    order = np.argsort(-np.abs(eigenvalues), kind="stable")
    eigenvalues = eigenvalues[order]
    moduli = np.abs(eigenvalues)
    return StabilityReport(
        eigenvalues=tuple(complex(e) for e in eigenvalues),
        moduli=tuple(float(v) for v in moduli),
        stable=bool(np.all(moduli < 1.0)),
    )


def unconditional_mean(fit: VarFit) -> np.ndarray:
    """(I - sum A_i)^{-1} c for a stable system."""
    return np.linalg.solve(np.eye(fit.k) - fit.coef.sum(axis=0), fit.intercepts)


def _ordering(fit: VarFit, ordering) -> list[int]:
    if ordering is None:
        return list(range(fit.k))
    ordering = list(ordering)
    if sorted(ordering) != sorted(fit.names):
        raise InputError(f"ordering {ordering} is not a permutation of {list(fit.names)}")
    return [fit.names.index(name) for name in ordering]


def ma_matrices(coef: np.ndarray, horizon: int) -> np.ndarray:
    """Phi_0..Phi_horizon."""
    p, k, _ = coef.shape
    phi = np.zeros((horizon + 1, k, k))
    phi[0] = np.eye(k)
    for h in range(1, horizon + 1):
        for i in range(1, min(h, p) + 1):
            phi[h] += phi[h - i] @ coef[i - 1]
    return phi


def _orthogonalized(fit: VarFit, horizon: int, ordering) -> tuple[np.ndarray, tuple[str, ...]]:
    if horizon < 0:
        raise InputError(f"horizon must be non-negative, got {horizon}")
    perm = _ordering(fit, ordering)
    coef = fit.coef[:, perm][:, :, perm]
    cov = fit.resid_cov[np.ix_(perm, perm)]
    try:
        chol = np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        raise DegenerateDataError("residual covariance is not positive definite under this ordering") from None
    theta = ma_matrices(coef, horizon) @ chol
    return theta, tuple(fit.names[i] for i in perm)


def irf(fit: VarFit, horizon: int, ordering=None) -> ImpulseResponse:
    theta, names = _orthogonalized(fit, horizon, ordering)
    return ImpulseResponse(horizon=horizon, names=names, responses=theta)


def fevd(fit: VarFit, horizon: int, ordering=None) -> FevdTable:
    """
    Percent share of each variable's h-step forecast error variance due to
    each orthogonalized shock, h = 1..horizon.
    """
    if horizon < 1:
        raise InputError(f"FEVD horizon must be positive, got {horizon}")
    theta, names = _orthogonalized(fit, horizon - 1, ordering)
    contributions = np.cumsum(theta**2, axis=0)        # (H, k, k)
    mse = contributions.sum(axis=2)                    # (H, k)
    shares = 100.0 * contributions / mse[:, :, None]
    return FevdTable(horizon=horizon, names=names, shares=shares, std=np.sqrt(mse))
