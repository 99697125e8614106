# reports/charts.py
# Minimal matplotlib SVG charts on a fixed 800x400 canvas. The hash salt and
# the null Date metadata keep repeated renders byte-identical.

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from config import CHART_DPI, CHART_SIZE_IN  # noqa: E402

_RC = {
    "svg.hashsalt": "quantset",
    "svg.fonttype": "none",
    "path.simplify": False,
}


def _save(fig, path: str):
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def line_chart(path: str, x, series: dict, title: str = "", xlabel: str = "", ylabel: str = ""):
    """One line per entry of `series` (label -> values) against x."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=CHART_SIZE_IN, dpi=CHART_DPI)
        for label, values in series.items():
            ax.plot(list(x), list(values), linewidth=1.0, label=label)
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        if len(series) > 1:
            ax.legend(loc="best")
        fig.tight_layout()
        _save(fig, path)


def scatter_chart(path: str, pairs, title: str = "", xlabel: str = "", ylabel: str = ""):
    """Q-Q scatter of (normal quantile, sample) pairs with the line mean + std * x."""
    xs = np.array([a for a, _ in pairs])
    ys = np.array([b for _, b in pairs])
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=CHART_SIZE_IN, dpi=CHART_DPI)
        ax.scatter(xs, ys, s=6)
        if xs.size > 1:
            ends = np.array([xs.min(), xs.max()])
            ax.plot(ends, ys.mean() + ys.std(ddof=1) * ends, linewidth=0.8, color="gray")
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        fig.tight_layout()
        _save(fig, path)


def bar_chart(path: str, labels, values, band: float | None = None, title: str = "", xlabel: str = ""):
    """Bars with an optional symmetric confidence band (correlograms)."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=CHART_SIZE_IN, dpi=CHART_DPI)
        ax.bar(list(labels), list(values), width=0.4)
        if band is not None:
            ax.axhline(band, linestyle="--", linewidth=0.8, color="gray")
            ax.axhline(-band, linestyle="--", linewidth=0.8, color="gray")
        ax.axhline(0.0, linewidth=0.8, color="black")
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        fig.tight_layout()
        _save(fig, path)
