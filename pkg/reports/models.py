# reports/models.py
from dataclasses import dataclass, field
from typing import Optional

from config import (
    ARMA_CRITERION,
    ARMA_PMAX,
    ARMA_QMAX,
    DATE_FORMAT,
    EGARCH_FORECAST_PATHS,
    GARCH_ARCH_ORDER,
    GARCH_GARCH_ORDER,
    OUTPUT_DIR,
    OUTPUT_FORMATS,
    RISK_PROBS,
    SEED,
    VAR_LAG,
    WHITE_NOISE_LAGS,
)
from series_core.models import ColumnMap
from utils.errors import InputError

ALL_FORMATS = ("text", "json", "csv", "svg")
VOL_MODELS = ("garch", "egarch")


@dataclass
class RunConfig:
    """Everything one CLI run needs; built from parsed arguments."""

    command: str
    input_path: Optional[str] = None
    column_map: ColumnMap = field(default_factory=ColumnMap)
    date_format: str = DATE_FORMAT
    out_dir: str = OUTPUT_DIR
    formats: tuple[str, ...] = OUTPUT_FORMATS
    seed: int = SEED

    # ARMA
    p: Optional[int] = None
    q: Optional[int] = None
    pmax: int = ARMA_PMAX
    qmax: int = ARMA_QMAX
    criterion: str = ARMA_CRITERION
    zero_ma: tuple[int, ...] = ()
    holdout: int = 0

    # identification / testing
    lags: Optional[int] = None
    white_noise_lags: tuple[int, ...] = WHITE_NOISE_LAGS

    # volatility
    model: str = "garch"
    arch_order: int = GARCH_ARCH_ORDER
    garch_order: int = GARCH_GARCH_ORDER
    raw_returns: bool = False
    mc_paths: int = EGARCH_FORECAST_PATHS

    # forecasting / risk
    horizon: Optional[int] = None
    probs: tuple[float, ...] = RISK_PROBS
    mu: Optional[float] = None
    sigma: Optional[float] = None
    fit_path: Optional[str] = None

    # VAR
    var_lag: int = VAR_LAG
    ordering: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        unknown = [f for f in self.formats if f not in ALL_FORMATS]
        if unknown:
            raise InputError(f"unknown output format(s) {unknown}; choose from {ALL_FORMATS}")
        if self.model not in VOL_MODELS:
            raise InputError(f"model must be one of {VOL_MODELS}, got '{self.model}'")
        if self.holdout < 0:
            raise InputError(f"holdout must be non-negative, got {self.holdout}")
        if not self.white_noise_lags or any(lag < 1 for lag in self.white_noise_lags):
            raise InputError(f"white-noise lags must be positive integers, got {list(self.white_noise_lags)}")
        if self.seed is None:
            self.seed = SEED

    def wants(self, fmt: str) -> bool:
        return fmt in self.formats


@dataclass
class Report:
    """What a command produced: the text report, its JSON payload and the files written."""

    command: str
    text: str
    data: dict
    files: list[str] = field(default_factory=list)
