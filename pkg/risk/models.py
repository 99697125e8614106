# risk/models.py
from dataclasses import dataclass


@dataclass(frozen=True)
class RiskRow:
    prob: float
    var_value: float
    es_value: float

    def to_dict(self) -> dict:
        return {"prob": self.prob, "var": self.var_value, "es": self.es_value}


@dataclass(frozen=True)
class StepRiskRow:
    """Risk figures for one step of a forecast path."""

    step: int
    mu: float
    sigma: float
    rows: tuple[RiskRow, ...]

    def to_dict(self) -> dict:
        return {"step": self.step, "mu": self.mu, "sigma": self.sigma, "rows": [r.to_dict() for r in self.rows]}
