# stattests/models.py
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from utils.errors import InputError

Dof = Union[float, tuple[float, ...], None]


def _plain(value):
    """JSON-friendly copy of a detail value."""
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if np.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    return value


@dataclass(frozen=True)
class TestResult:
    """Uniform record for a hypothesis test."""

    __test__ = False  # not a pytest test class

    name: str
    statistic: float
    p_value: float
    dof: Dof = None
    lag: Optional[int] = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if not np.isfinite(self.statistic):
            raise InputError(f"{self.name}: statistic is not finite")
        if not 0.0 <= self.p_value <= 1.0:
            raise InputError(f"{self.name}: p-value {self.p_value} outside [0, 1]")
        object.__setattr__(self, "statistic", float(self.statistic))
        object.__setattr__(self, "p_value", float(self.p_value))

    def to_dict(self) -> dict:
        dof = self.dof
        if isinstance(dof, tuple):
            dof = [float(d) for d in dof]
        elif dof is not None:
            dof = float(dof)
        return {
            "name": self.name,
            "statistic": self.statistic,
            "dof": dof,
            "p_value": self.p_value,
            "lag": self.lag,
            "detail": _plain(self.detail),
        }


@dataclass(frozen=True)
class EacfTable:
    symbols: tuple[tuple[str, ...], ...]
    sample_size: int
    values: tuple[tuple[float, ...], ...] = ()

    @property
    def p_max(self) -> int:
        return len(self.symbols) - 1

    @property
    def q_max(self) -> int:
        return len(self.symbols[0]) - 1

    def to_text(self) -> str:
        """AR/MA grid with tab-separated columns, rows = AR order."""
        header = "AR/MA\t" + "\t".join(str(q) for q in range(self.q_max + 1))
        rows = [f"{p}\t" + "\t".join(row) for p, row in enumerate(self.symbols)]
        return "\n".join([header, *rows]) + "\n"
