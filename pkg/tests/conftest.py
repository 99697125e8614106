# tests/conftest.py

import logging
import math
from datetime import date, timedelta

import numpy as np
import pytest


@pytest.fixture(autouse=True)
def quiet_logs():
    logging.disable(logging.WARNING)
    yield
    logging.disable(logging.NOTSET)


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


def daily_dates(n: int, start: date = date(2020, 1, 1)) -> list[str]:
    days = [start + timedelta(days=i) for i in range(n)]
    return [d.isoformat() for d in days]


def write_price_csv(path, closes, opens=None, highs=None, lows=None, reverse=False):
    """Header-row CSV with ISO dates; optional OHLC columns."""
    dates = daily_dates(len(closes))
    columns = ["Date", "Close"]
    data = [dates, closes]
    for name, values in (("Open", opens), ("High", highs), ("Low", lows)):
        if values is not None:
            columns.append(name)
            data.append(values)
    rows = list(zip(*data))
    if reverse:
        rows = rows[::-1]
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join([row[0]] + [repr(float(v)) for v in row[1:]]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def prices_from_returns(returns, start: float = 100.0) -> np.ndarray:
    return start * np.exp(np.concatenate([[0.0], np.cumsum(returns)]))


@pytest.fixture
def price_csv(tmp_path, rng):
    """600 prices from an AR(1) return process with a little volatility clustering."""
    n = 600
    eps = rng.standard_normal(n)
    r = np.empty(n)
    sigma2 = 1e-4
    previous_r, previous_u = 0.0, 0.0
    for t in range(n):
        sigma2 = 1e-6 + 0.1 * previous_u**2 + 0.85 * sigma2
        u = math.sqrt(sigma2) * eps[t]
        r[t] = 0.0003 + 0.3 * previous_r + u
        previous_r, previous_u = r[t] - 0.0003, u
    return write_price_csv(tmp_path / "prices.csv", prices_from_returns(r))


@pytest.fixture
def ohlc_csv(tmp_path, rng):
    """Four price columns driven by a stable VAR(1) in which Open leads Close."""
    n = 400
    y = np.zeros((n, 4))
    A = np.array(
        [
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.4, 0.0, 0.0],
            [0.0, 0.0, 0.3, 0.0],
            [0.0, 0.0, 0.0, 0.2],
        ]
    )
    A[0, 1] = 0.4  # Open_{t-1} -> Close_t
    shocks = rng.standard_normal((n, 4))
    for t in range(1, n):
        y[t] = A @ y[t - 1] + shocks[t]
    levels = 100.0 + y
    return write_price_csv(
        tmp_path / "ohlc.csv",
        closes=levels[:, 0],
        opens=levels[:, 1],
        highs=levels[:, 2],
        lows=levels[:, 3],
    )
