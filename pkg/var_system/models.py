# var_system/models.py
from dataclasses import dataclass
from typing import Optional

import numpy as np

from series_core.models import Series
from stattests.models import TestResult
from utils.errors import InputError


@dataclass(frozen=True)
class MultiSeries:
    """k >= 2 named component series of equal length with aligned labels."""

    components: tuple[Series, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if len(components) < 2:
            raise InputError(f"a multivariate series needs at least 2 components, got {len(components)}")
        lengths = {len(c) for c in components}
        if len(lengths) != 1:
            raise InputError(f"component lengths differ: {[len(c) for c in components]}")
        names = [c.name for c in components]
        if len(set(names)) != len(names):
            raise InputError(f"component names must be unique, got {names}")
        labels = [c.labels for c in components if c.labels is not None]
        if any(lab != labels[0] for lab in labels[1:]):
            raise InputError("component labels are not aligned")
        object.__setattr__(self, "components", components)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.components)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return len(self.components[0])

    def matrix(self) -> np.ndarray:
        """n x k array, columns in component order."""
        return np.column_stack([c.values for c in self.components])

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown component '{name}'; have {list(self.names)}") from None

    def select(self, names) -> "MultiSeries":
        return MultiSeries(components=tuple(self.components[self.index_of(name)] for name in names))

    @classmethod
    def from_price_table(cls, table, roles=None) -> "MultiSeries":
        roles = roles or table.roles
        return cls(components=tuple(table[role] for role in roles))


@dataclass(frozen=True)
class VarFit:
    lag_order: int
    names: tuple[str, ...]
    intercepts: np.ndarray
    coef: np.ndarray            # (p, k, k); coef[i] multiplies y_{t-i-1}
    resid_cov: np.ndarray
    companion: np.ndarray
    n_effective: int
    residuals: np.ndarray       # (n_effective, k)
    data: np.ndarray            # (n, k) sample used for the fit
    std_errors: Optional[np.ndarray] = None   # (1 + k p, k), same layout as the regressors

    @property
    def k(self) -> int:
        return len(self.names)

    def equation(self, name: str) -> dict:
        """Coefficients of one equation keyed 'const' and '<var>_lag<i>'."""
        i = self.names.index(name)
        row = {"const": float(self.intercepts[i])}
        for lag in range(self.lag_order):
            for j, other in enumerate(self.names):
                row[f"{other}_lag{lag + 1}"] = float(self.coef[lag, i, j])
        return row

    def to_dict(self) -> dict:
        return {
            "model": "var",
            "lag_order": self.lag_order,
            "names": list(self.names),
            "intercepts": [float(v) for v in self.intercepts],
            "coef": self.coef.tolist(),
            "resid_cov": self.resid_cov.tolist(),
            "n_effective": self.n_effective,
            "equations": {name: self.equation(name) for name in self.names},
        }


@dataclass(frozen=True)
class GrangerRow:
    cause: str
    effect: str
    result: TestResult
    stars: str

    def to_dict(self) -> dict:
        return {
            "cause": self.cause,
            "effect": self.effect,
            "f_statistic": self.result.statistic,
            "p_value": self.result.p_value,
            "dof": list(self.result.dof),
            "stars": self.stars,
        }


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: tuple[complex, ...]
    moduli: tuple[float, ...]
    stable: bool

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [[float(e.real), float(e.imag)] for e in self.eigenvalues],
            "moduli": list(self.moduli),
            "stable": self.stable,
        }


@dataclass(frozen=True)
class ImpulseResponse:
    horizon: int
    names: tuple[str, ...]      # Cholesky ordering
    responses: np.ndarray       # (H + 1, k, k); [h, i, j] = response of i to shock in j

    def to_rows(self) -> list[tuple[int, str, str, float]]:
        rows = []
        for h in range(self.horizon + 1):
            for j, shock in enumerate(self.names):
                for i, response in enumerate(self.names):
                    rows.append((h, shock, response, float(self.responses[h, i, j])))
        return rows

    def to_dict(self) -> dict:
        return {"horizon": self.horizon, "names": list(self.names), "responses": self.responses.tolist()}


@dataclass(frozen=True)
class FevdTable:
    horizon: int
    names: tuple[str, ...]
    shares: np.ndarray          # (H, k, k) percent; [h-1, i, j] = share of i's variance due to j at horizon h
    std: np.ndarray             # (H, k) forecast standard deviation

    def rows_for(self, name: str) -> list[tuple]:
        """(period, std, share_1..share_k) rows of one variable."""
        i = self.names.index(name)
        return [
            (h + 1, float(self.std[h, i]), *[float(s) for s in self.shares[h, i]])
            for h in range(self.horizon)
        ]

    def to_dict(self) -> dict:
        return {
            "horizon": self.horizon,
            "names": list(self.names),
            "shares": self.shares.tolist(),
            "std": self.std.tolist(),
        }


@dataclass(frozen=True)
class VarForecast:
    horizon: int
    names: tuple[str, ...]
    values: np.ndarray          # (h, k)

    def path(self, name: str) -> np.ndarray:
        return self.values[:, self.names.index(name)]

    def to_dict(self) -> dict:
        return {"horizon": self.horizon, "names": list(self.names), "values": self.values.tolist()}
