# arma/models.py
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from config import MAX_ARMA_ORDER
from series_core.models import Series
from utils.errors import InputError


@dataclass(frozen=True)
class ArmaSpec:
    """
    ARMA(p, q) order. zero_ar / zero_ma list 1-based lags whose coefficient
    is fixed at zero (subset models such as "theta_6 only").
    """

    p: int
    q: int
    include_mean: bool = True
    zero_ar: tuple[int, ...] = ()
    zero_ma: tuple[int, ...] = ()

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InputError(f"ARMA orders must be non-negative, got ({self.p}, {self.q})")
        if self.p > MAX_ARMA_ORDER or self.q > MAX_ARMA_ORDER:
            raise InputError(f"ARMA orders are capped at {MAX_ARMA_ORDER}, got ({self.p}, {self.q})")
        object.__setattr__(self, "zero_ar", tuple(sorted(set(int(k) for k in self.zero_ar))))
        object.__setattr__(self, "zero_ma", tuple(sorted(set(int(k) for k in self.zero_ma))))
        for lag in self.zero_ar:
            if not 1 <= lag <= self.p:
                raise InputError(f"zero_ar lag {lag} outside 1..{self.p}")
        for lag in self.zero_ma:
            if not 1 <= lag <= self.q:
                raise InputError(f"zero_ma lag {lag} outside 1..{self.q}")

    @property
    def free_ar(self) -> list[int]:
        return [k for k in range(1, self.p + 1) if k not in self.zero_ar]

    @property
    def free_ma(self) -> list[int]:
        return [k for k in range(1, self.q + 1) if k not in self.zero_ma]

    @property
    def is_subset(self) -> bool:
        return bool(self.zero_ar or self.zero_ma)

    @property
    def n_coefs(self) -> int:
        """Free AR and MA coefficients; the portmanteau fitdf."""
        return len(self.free_ar) + len(self.free_ma)

    @property
    def n_params(self) -> int:
        """Parameter count for the information criteria (innovation variance included)."""
        return len(self.free_ar) + len(self.free_ma) + int(self.include_mean) + 1

    def label(self) -> str:
        return f"ARMA({self.p},{self.q})"


@dataclass(frozen=True)
class ArmaFit:
    spec: ArmaSpec
    mean_c: float
    ar: tuple[float, ...]
    ma: tuple[float, ...]
    sigma2: float
    std_errors: dict
    log_lik: float
    aic: float
    bic: float
    residuals: Series
    n: int
    converged: bool = True
    series: Optional[Series] = None

    def coefficients(self) -> list[dict]:
        """(name, value, std_error) rows in the order mean, ar1.., ma1.., sigma2."""
        rows = []
        if self.spec.include_mean:
            rows.append(("mean", self.mean_c))
        rows += [(f"ar{i}", v) for i, v in enumerate(self.ar, start=1) if i not in self.spec.zero_ar]
        rows += [(f"ma{j}", v) for j, v in enumerate(self.ma, start=1) if j not in self.spec.zero_ma]
        rows.append(("sigma2", self.sigma2))
        out = []
        for name, value in rows:
            se = self.std_errors.get(name)
            se = float(se) if se is not None and np.isfinite(se) else None
            out.append({"name": name, "value": float(value), "std_error": se})
        return out

    def to_dict(self) -> dict:
        return {
            "model": "arma",
            "p": self.spec.p,
            "q": self.spec.q,
            "include_mean": self.spec.include_mean,
            "zero_ar": list(self.spec.zero_ar),
            "zero_ma": list(self.spec.zero_ma),
            "coefficients": self.coefficients(),
            "mean_c": float(self.mean_c),
            "sigma2": float(self.sigma2),
            "log_lik": float(self.log_lik),
            "aic": float(self.aic),
            "bic": float(self.bic),
            "n": self.n,
            "converged": self.converged,
        }


@dataclass(frozen=True)
class ForecastPath:
    horizon: int
    point: tuple[float, ...]
    std_err: tuple[float, ...]
    psi: tuple[float, ...]

    def to_rows(self) -> list[tuple[int, float, float]]:
        return [(h + 1, self.point[h], self.std_err[h]) for h in range(self.horizon)]

    def to_dict(self) -> dict:
        return {
            "horizon": self.horizon,
            "point": list(self.point),
            "std_err": list(self.std_err),
            "psi": list(self.psi),
        }


@dataclass(frozen=True)
class OrderScore:
    p: int
    q: int
    aic: Optional[float]
    bic: Optional[float]
    converged: bool
    message: str = ""

    def score(self, criterion: str) -> Optional[float]:
        return self.aic if criterion == "aic" else self.bic

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "aic": self.aic,
            "bic": self.bic,
            "converged": self.converged,
            "message": self.message,
        }


@dataclass(frozen=True)
class SelectionResult:
    spec: ArmaSpec
    criterion: str
    scores: tuple[OrderScore, ...]
    best_fit: ArmaFit
    failed: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def score_grid(self, p_max: int, q_max: int) -> list[list[Optional[float]]]:
        grid = [[None] * (q_max + 1) for _ in range(p_max + 1)]
        for row in self.scores:
            grid[row.p][row.q] = row.score(self.criterion)
        return grid

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "selected": {"p": self.spec.p, "q": self.spec.q},
            "scores": [row.to_dict() for row in self.scores],
            "failed": [list(cell) for cell in self.failed],
        }


@dataclass(frozen=True)
class ForecastEvaluation:
    """Out-of-sample comparison of a forecast path with realised values."""

    actual: tuple[float, ...]
    predicted: tuple[float, ...]
    errors: tuple[float, ...]
    rmse: float
    mae: float

    def to_dict(self) -> dict:
        return {
            "actual": list(self.actual),
            "predicted": list(self.predicted),
            "errors": list(self.errors),
            "rmse": self.rmse,
            "mae": self.mae,
        }
