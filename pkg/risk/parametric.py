# risk/parametric.py

"""
Normal Value-at-Risk and Expected Shortfall as upper-tail return quantiles:

    VaR_p = mu + z_p sigma
    ES_p  = mu + sigma phi(z_p) / (1 - p)

No loss-sign flip is applied.
"""

import math

from risk.models import RiskRow, StepRiskRow
from stattests.distributions import norm_pdf, norm_ppf
from utils.errors import InputError


def _check(mu: float, sigma: float, prob: float):
    if not math.isfinite(mu):
        raise InputError(f"mu must be finite, got {mu}")
    if not math.isfinite(sigma) or sigma < 0:
        raise InputError(f"sigma must be finite and non-negative, got {sigma}")
    if not 0.5 < prob < 1.0:
        raise InputError(f"probability must lie in (0.5, 1), got {prob}")


def var_normal(mu: float, sigma: float, prob: float) -> float:
    _check(mu, sigma, prob)
    if sigma == 0:
        return float(mu)
    return float(mu + norm_ppf(prob) * sigma)


def es_normal(mu: float, sigma: float, prob: float) -> float:
    _check(mu, sigma, prob)
    if sigma == 0:
        return float(mu)
    return float(mu + sigma * norm_pdf(norm_ppf(prob)) / (1.0 - prob))


def risk_table(mu: float, sigma: float, probs) -> list[RiskRow]:
    probs = list(probs)
    if not probs:
        raise InputError("at least one probability is required")
    return [RiskRow(prob=float(p), var_value=var_normal(mu, sigma, p), es_value=es_normal(mu, sigma, p)) for p in probs]


def forecast_risk_table(mean_path, sigma_path, probs) -> list[StepRiskRow]:
    """
    Risk table for every step of a combined mean/volatility forecast.
    """
    mean_path = list(mean_path)
    sigma_path = list(sigma_path)
    if len(mean_path) != len(sigma_path):
        raise InputError(f"mean path has {len(mean_path)} steps but sigma path has {len(sigma_path)}")
    return [
        StepRiskRow(step=k + 1, mu=float(mu), sigma=float(sigma), rows=tuple(risk_table(mu, sigma, probs)))
        for k, (mu, sigma) in enumerate(zip(mean_path, sigma_path))
    ]


def format_risk_table(rows: list[RiskRow], title: str = "", digits: int = 4) -> str:
    """
    Tab-separated layout of the risk tables: one row per probability.
    """
    lines = [title] if title else []
    lines.append("\tprob\tVaR\tES")
    for i, row in enumerate(rows, start=1):
        lines.append(f"{i}\t{row.prob:g}\t{row.var_value:.{digits}f}\t{row.es_value:.{digits}f}")
    return "\n".join(lines) + "\n"
