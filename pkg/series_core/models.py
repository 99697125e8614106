# series_core/models.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from utils.errors import InputError


class SeriesKind(str, Enum):
    PRICE = "price"
    LOG_RETURN = "log_return"
    RESIDUAL = "residual"
    OTHER = "other"


@dataclass(frozen=True)
class Series:
    """
    Ordered numeric sequence with optional ISO date labels.
    Values are stored as a read-only float array.
    """

    values: np.ndarray
    labels: Optional[tuple[str, ...]] = None
    name: str = "series"
    kind: SeriesKind = SeriesKind.OTHER

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        if values.size == 0:
            raise InputError(f"series '{self.name}' is empty")
        if not np.all(np.isfinite(values)):
            raise InputError(f"series '{self.name}' contains NaN or infinite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "kind", SeriesKind(self.kind))
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != values.size:
                raise InputError(
                    f"series '{self.name}' has {values.size} values but {len(labels)} labels"
                )
            # ISO dates order lexicographically
            if any(a >= b for a, b in zip(labels, labels[1:])):
                raise InputError(f"labels of series '{self.name}' are not strictly increasing")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return int(self.values.size)

    def with_values(self, values, kind=None, name=None, labels="keep") -> "Series":
        """New series sharing this one's metadata."""
        return Series(
            values=values,
            labels=self.labels if labels == "keep" else labels,
            name=self.name if name is None else name,
            kind=self.kind if kind is None else kind,
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "labels": list(self.labels) if self.labels is not None else None,
            "values": [float(v) for v in self.values],
        }


@dataclass(frozen=True)
class SummaryStats:
    n: int
    mean: float
    std_dev: float
    min: float
    max: float
    skewness: float
    excess_kurtosis: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mean": self.mean,
            "std_dev": self.std_dev,
            "min": self.min,
            "max": self.max,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
        }


@dataclass(frozen=True)
class CorrelogramRow:
    lag: int
    acf: float
    pacf: float
    conf_band: float

    def to_dict(self) -> dict:
        return {"lag": self.lag, "acf": self.acf, "pacf": self.pacf, "conf_band": self.conf_band}


@dataclass(frozen=True)
class ColumnMap:
    """CSV header names for each price field; None leaves a field unmapped."""

    date: str = "Date"
    open: Optional[str] = None
    high: Optional[str] = None
    low: Optional[str] = None
    close: Optional[str] = "Close"

    def price_columns(self) -> dict[str, str]:
        fields = {"close": self.close, "open": self.open, "high": self.high, "low": self.low}
        return {role: column for role, column in fields.items() if column}


@dataclass(frozen=True)
class PriceTable:
    """Result of CSV ingestion: one price Series per mapped column."""

    series: dict[str, Series]
    dropped_rows: int = 0
    source: str = ""
    roles: tuple[str, ...] = field(default_factory=tuple)

    def __getitem__(self, role: str) -> Series:
        try:
            return self.series[role]
        except KeyError:
            raise InputError(f"column role '{role}' was not loaded") from None


@dataclass(frozen=True)
class Histogram:
    edges: tuple[float, ...]
    counts: tuple[int, ...]

    def to_rows(self) -> list[tuple[float, float, int]]:
        return [(self.edges[i], self.edges[i + 1], self.counts[i]) for i in range(len(self.counts))]
