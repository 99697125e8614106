# reports/describe.py

from config import CORRELOGRAM_MAX_LAG, HISTOGRAM_BINS, LJUNG_BOX_LAG
from reports import charts, tables
from reports.inputs import load_returns
from reports.models import Report, RunConfig
from reports.output import ReportWriter
from series_core.describe import correlogram, histogram, qq_pairs, summary_stats
from stattests.portmanteau import ljung_box
from utils.errors import InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def correlogram_lag(requested: int | None, n: int) -> int:
    """Requested lag (default CORRELOGRAM_MAX_LAG) capped below n/2."""
    cap = (n - 1) // 2
    if cap < 1:
        raise InputError(f"a correlogram needs at least 3 observations, got {n}")
    return min(requested or CORRELOGRAM_MAX_LAG, cap)


def cmd_describe(config: RunConfig) -> Report:
    logger.info("🚀 Starting describe")

    # Step 1: Load prices and compute log returns
    logger.info("Step 1: Loading prices")
    prices, returns = load_returns(config)

    # Step 2: Summary statistics
    logger.info("Step 2: Summary statistics")
    price_stats = summary_stats(prices)
    return_stats = summary_stats(returns)

    # Step 3: Correlogram of returns
    max_lag = correlogram_lag(config.lags, len(returns))
    logger.info(f"Step 3: Correlogram up to lag {max_lag}")
    rows = correlogram(returns, max_lag)

    # Step 4: Distribution shape
    logger.info("Step 4: Histogram and Q-Q pairs")
    hist = histogram(returns, HISTOGRAM_BINS)
    qq = qq_pairs(returns)

    # Step 5: Whiteness of returns
    whiteness = None
    if LJUNG_BOX_LAG < len(returns) / 2:
        logger.info(f"Step 5: Ljung-Box test with {LJUNG_BOX_LAG} lags")
        whiteness = ljung_box(returns, LJUNG_BOX_LAG)
    else:
        logger.warning(f"⚠️ Step 5: skipping Ljung-Box, {len(returns)} returns are too few for lag {LJUNG_BOX_LAG}")

    text = (
        f"quantset describe: {prices.name}\n"
        + tables.section("Prices")
        + tables.format_summary(prices.name, price_stats)
        + tables.section("Log returns")
        + tables.format_summary(f"{returns.name} log returns", return_stats)
        + tables.section("Correlogram of log returns")
        + tables.format_correlogram(rows)
        + (tables.format_test(whiteness) if whiteness else "")
    )
    data = {
        "command": "describe",
        "series": prices.name,
        "price_summary": price_stats,
        "return_summary": return_stats,
        "correlogram": [r.to_dict() for r in rows],
        "ljung_box": whiteness,
    }

    # Step 6: Write outputs
    logger.info("Step 6: Writing outputs")
    writer = ReportWriter(config.out_dir, config.formats)
    writer.text("describe.txt", text)
    writer.json("describe.json", data)
    labels = returns.labels or tuple(str(i) for i in range(len(returns)))
    writer.csv("returns.csv", ["date", "log_return"], zip(labels, returns.values))
    writer.csv("correlogram.csv", ["lag", "acf", "pacf", "conf_band"], [(r.lag, r.acf, r.pacf, r.conf_band) for r in rows])
    writer.csv("histogram.csv", ["lower", "upper", "count"], hist.to_rows())
    writer.csv("qq.csv", ["normal_quantile", "sample"], qq)
    writer.chart("prices.svg", charts.line_chart, range(len(prices)), {prices.name: prices.values},
                 title=f"{prices.name} price", xlabel="observation")
    writer.chart("returns.svg", charts.line_chart, range(len(returns)), {"log return": returns.values},
                 title=f"{prices.name} log returns", xlabel="observation")
    writer.chart("correlogram.svg", charts.bar_chart, [r.lag for r in rows], [r.acf for r in rows],
                 band=rows[0].conf_band, title="ACF of log returns", xlabel="lag")
    writer.chart("qq.svg", charts.scatter_chart, qq, title="Normal Q-Q plot of log returns",
                 xlabel="normal quantile", ylabel="sample")

    logger.info(f"✅ describe finished: {len(writer.files)} file(s) written")
    return Report(command="describe", text=text, data=data, files=writer.files)
