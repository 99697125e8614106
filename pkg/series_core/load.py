# series_core/load.py
# Purpose: read a price CSV into one Series per mapped column.
# Rows with any unparseable mapped cell are dropped (never interpolated) and
# counted; dates are normalized to ISO strings and only used for ordering.

import os
import re

import numpy as np
import pandas as pd

from config import DATE_FORMAT
from series_core.models import ColumnMap, PriceTable, Series, SeriesKind
from utils.errors import InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)

# Thousands separators, currency symbols and surrounding whitespace
_NUMBER_NOISE_RE = re.compile(r"[,\s$€£¥]")


def _parse_numbers(column: pd.Series) -> pd.Series:
    cleaned = column.astype("string").str.replace(_NUMBER_NOISE_RE, "", regex=True)
    return pd.to_numeric(cleaned, errors="coerce")


def load_csv(path: str, column_map: ColumnMap | None = None, date_format: str = DATE_FORMAT) -> PriceTable:
    """
    Load a header-row CSV into price Series sorted ascending by date.
    """
    column_map = column_map or ColumnMap()
    if not os.path.exists(path):
        raise InputError(f"input file not found: {path}")

    try:
        frame = pd.read_csv(path, dtype=str, skipinitialspace=True, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise InputError(f"input file has no header row: {path}") from None
    except pd.errors.ParserError as e:
        raise InputError(f"cannot parse {path}: {e}") from None
    frame.columns = [str(c).strip() for c in frame.columns]

    price_columns = column_map.price_columns()
    if not price_columns:
        raise InputError("no price column is mapped")
    wanted = [column_map.date, *price_columns.values()]
    missing = [c for c in wanted if c not in frame.columns]
    if missing:
        raise InputError(f"missing column(s) {missing} in {path}; found {list(frame.columns)}")

    dates = pd.to_datetime(frame[column_map.date].str.strip(), format=date_format, errors="coerce")
    parsed = pd.DataFrame({"date": dates})
    for role, column in price_columns.items():
        parsed[role] = _parse_numbers(frame[column])

    numeric = parsed[list(price_columns)].to_numpy(dtype=float)
    valid = parsed["date"].notna().to_numpy() & np.all(np.isfinite(numeric), axis=1)
    dropped = int((~valid).sum())
    if dropped:
        logger.warning(f"Dropped {dropped} row(s) with unparseable cells from {path}")

    parsed = parsed.loc[valid]
    if parsed.empty:
        raise InputError(f"no parseable rows in {path}")
    if parsed["date"].duplicated().any():
        duplicates = parsed.loc[parsed["date"].duplicated(), "date"].dt.strftime("%Y-%m-%d").tolist()
        raise InputError(f"duplicate dates in {path}: {duplicates[:5]}")

    parsed = parsed.sort_values("date", kind="mergesort")
    labels = tuple(parsed["date"].dt.strftime("%Y-%m-%d"))

    series = {
        role: Series(values=parsed[role].to_numpy(dtype=float), labels=labels, name=column, kind=SeriesKind.PRICE)
        for role, column in price_columns.items()
    }
    logger.info(f"Loaded {len(labels)} rows x {len(series)} column(s) from {path}")
    return PriceTable(series=series, dropped_rows=dropped, source=str(path), roles=tuple(price_columns))
