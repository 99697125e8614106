# reports/inputs.py

from reports.models import RunConfig
from series_core.load import load_csv
from series_core.models import PriceTable, Series
from series_core.transform import log_returns
from utils.errors import InputError


def load_table(config: RunConfig) -> PriceTable:
    if not config.input_path:
        raise InputError(f"'{config.command}' needs --input")
    return load_csv(config.input_path, config.column_map, config.date_format)


def load_returns(config: RunConfig) -> tuple[Series, Series]:
    """(close prices, close log returns)."""
    table = load_table(config)
    prices = table["close"]
    return prices, log_returns(prices)
