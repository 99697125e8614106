# reports/output.py
# Writers for report files. JSON is canonical (sorted keys, 2-space indent,
# trailing newline) so that re-reading and re-writing gives identical bytes.

import json
import math
import os

import numpy as np
import pandas as pd

from utils.logger import setup_logger

logger = setup_logger(__name__)


def to_jsonable(value):
    """Plain Python copy of value; non-finite floats become None."""
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def canonical_json(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def ensure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def write_text(path: str, text: str) -> str:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"💾 Wrote {path}")
    return path


def write_json(path: str, obj) -> str:
    return write_text(path, canonical_json(obj))


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_csv(path: str, columns: list[str], rows) -> str:
    frame = pd.DataFrame([list(r) for r in rows], columns=columns)
    frame.to_csv(path, index=False, lineterminator="\n", float_format="%.10g")
    logger.info(f"💾 Wrote {path}")
    return path


class ReportWriter:
    """Writes a command's files into the output directory, honouring the requested formats."""

    def __init__(self, out_dir: str, formats):
        self.out_dir = ensure_dir(out_dir)
        self.formats = tuple(formats)
        self.files: list[str] = []

    def path(self, name: str) -> str:
        return os.path.join(self.out_dir, name)

    def text(self, name: str, text: str):
        if "text" in self.formats:
            self.files.append(write_text(self.path(name), text))

    def json(self, name: str, obj):
        if "json" in self.formats:
            self.files.append(write_json(self.path(name), obj))

    def csv(self, name: str, columns, rows):
        if "csv" in self.formats:
            self.files.append(write_csv(self.path(name), list(columns), rows))

    def chart(self, name: str, draw, *args, **kwargs):
        """draw(path, *args, **kwargs) renders one SVG file."""
        if "svg" in self.formats:
            path = self.path(name)
            draw(path, *args, **kwargs)
            self.files.append(path)
