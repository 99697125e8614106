# garch/models.py
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from series_core.models import Series
from stattests.models import TestResult


def _se(std_errors: dict, name: str):
    value = std_errors.get(name)
    return float(value) if value is not None and np.isfinite(value) else None


@dataclass(frozen=True)
class GarchFit:
    """
    GARCH(p, q) on mean-free residuals:
    sigma_t^2 = alpha0 + sum_i alpha_i u_{t-i}^2 + sum_j beta_j sigma_{t-j}^2
    """

    alpha0: float
    alpha: tuple[float, ...]
    beta: tuple[float, ...]
    std_errors: dict
    log_lik: float
    cond_var: np.ndarray
    residuals: Series
    std_residuals: Series
    next_variance: float
    converged: bool = True
    near_unit_persistence: bool = False
    mean: float = 0.0

    @property
    def q_arch(self) -> int:
        return len(self.alpha)

    @property
    def p_garch(self) -> int:
        return len(self.beta)

    @property
    def persistence(self) -> float:
        return float(sum(self.alpha) + sum(self.beta))

    @property
    def unconditional_variance(self) -> float:
        gap = 1.0 - self.persistence
        return self.alpha0 / gap if gap > 0 else float("inf")

    @property
    def n_params(self) -> int:
        return 1 + self.q_arch + self.p_garch

    @property
    def n(self) -> int:
        return len(self.residuals)

    def label(self) -> str:
        return f"GARCH({self.p_garch},{self.q_arch})"

    def coefficients(self) -> list[dict]:
        rows = [("alpha0", self.alpha0)]
        rows += [(f"alpha{i}", a) for i, a in enumerate(self.alpha, start=1)]
        rows += [(f"beta{j}", b) for j, b in enumerate(self.beta, start=1)]
        return [{"name": name, "value": float(v), "std_error": _se(self.std_errors, name)} for name, v in rows]

    def to_dict(self) -> dict:
        gap = 1.0 - self.persistence
        return {
            "model": "garch",
            "p_garch": self.p_garch,
            "q_arch": self.q_arch,
            "coefficients": self.coefficients(),
            "log_lik": float(self.log_lik),
            "persistence": self.persistence,
            "unconditional_variance": self.alpha0 / gap if gap > 0 else None,
            "next_variance": float(self.next_variance),
            "mean": float(self.mean),
            "n": self.n,
            "converged": self.converged,
            "near_unit_persistence": self.near_unit_persistence,
        }


@dataclass(frozen=True)
class EgarchFit:
    """
    eGARCH(1,1): ln h_t = omega + beta ln h_{t-1} + alpha (|z_{t-1}| - sqrt(2/pi)) + gamma z_{t-1}
    """

    omega: float
    beta_lnh: float
    alpha_mag: float
    gamma_sign: float
    std_errors: dict
    log_lik: float
    cond_var: np.ndarray
    residuals: Series
    std_residuals: Series
    next_variance: float
    converged: bool = True
    near_unit_persistence: bool = False
    mean: float = 0.0

    n_params = 4

    @property
    def n(self) -> int:
        return len(self.residuals)

    def label(self) -> str:
        return "eGARCH(1,1)"

    def coefficients(self) -> list[dict]:
        rows = [
            ("omega", self.omega),
            ("beta", self.beta_lnh),
            ("alpha", self.alpha_mag),
            ("gamma", self.gamma_sign),
        ]
        return [{"name": name, "value": float(v), "std_error": _se(self.std_errors, name)} for name, v in rows]

    def to_dict(self) -> dict:
        return {
            "model": "egarch",
            "coefficients": self.coefficients(),
            "log_lik": float(self.log_lik),
            "next_variance": float(self.next_variance),
            "mean": float(self.mean),
            "n": self.n,
            "converged": self.converged,
            "near_unit_persistence": self.near_unit_persistence,
        }


@dataclass(frozen=True)
class VolForecast:
    horizon: int
    sigma2: tuple[float, ...]
    sigma: tuple[float, ...]
    method: str = "recursion"
    paths: int = 0

    def to_rows(self) -> list[tuple[int, float, float]]:
        return [(k + 1, self.sigma2[k], self.sigma[k]) for k in range(self.horizon)]

    def to_dict(self) -> dict:
        return {
            "horizon": self.horizon,
            "sigma2": list(self.sigma2),
            "sigma": list(self.sigma),
            "method": self.method,
            "paths": self.paths,
        }


@dataclass(frozen=True)
class ReturnForecast:
    """Mean path from the ARMA forecast with the volatility model's sigma."""

    horizon: int
    mean: tuple[float, ...]
    sigma: tuple[float, ...]

    def to_rows(self) -> list[tuple[int, float, float]]:
        return [(k + 1, self.mean[k], self.sigma[k]) for k in range(self.horizon)]

    def to_dict(self) -> dict:
        return {"horizon": self.horizon, "mean": list(self.mean), "sigma": list(self.sigma)}


@dataclass(frozen=True)
class GarchDiagnostics:
    jarque_bera: TestResult
    ljung_box_levels: list[TestResult]
    ljung_box_squares: list[TestResult]
    arch_lm: TestResult
    sign_bias: list[TestResult]
    pearson_gof: TestResult
    z_variance: float
    shapiro_wilk: Optional[TestResult] = None
    notes: list[str] = field(default_factory=list)

    def all_results(self) -> list[TestResult]:
        results = [self.jarque_bera]
        if self.shapiro_wilk is not None:
            results.append(self.shapiro_wilk)
        return results + self.ljung_box_levels + self.ljung_box_squares + [self.arch_lm] + self.sign_bias + [self.pearson_gof]

    def to_dict(self) -> dict:
        return {
            "jarque_bera": self.jarque_bera.to_dict(),
            "shapiro_wilk": self.shapiro_wilk.to_dict() if self.shapiro_wilk else None,
            "ljung_box_levels": [r.to_dict() for r in self.ljung_box_levels],
            "ljung_box_squares": [r.to_dict() for r in self.ljung_box_squares],
            "arch_lm": self.arch_lm.to_dict(),
            "sign_bias": [r.to_dict() for r in self.sign_bias],
            "pearson_gof": self.pearson_gof.to_dict(),
            "z_variance": self.z_variance,
            "notes": list(self.notes),
        }
