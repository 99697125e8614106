# reports/arma_report.py

from arma.estimate import fit_arma, residuals
from arma.forecast import evaluate_forecast, forecast
from arma.models import ArmaFit, ArmaSpec
from arma.select import select_order
from config import ADF_LAG, FORECAST_HORIZON
from reports import charts, tables
from reports.inputs import load_returns
from reports.models import Report, RunConfig
from reports.output import ReportWriter
from series_core.models import Series
from stattests.portmanteau import portmanteau_table
from stattests.unit_root import adf_test
from utils.errors import InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def usable_lags(lags, n: int, fitdf: int) -> list[int]:
    """White-noise lags that are testable for a sample of size n."""
    return [lag for lag in lags if lag > fitdf and lag < n / 2]


def mean_model(returns: Series, config: RunConfig):
    """
    ARMA fit from explicit --p/--q, else from the order-selection grid.
    Returns (fit, selection or None).
    """
    if config.p is not None or config.q is not None:
        spec = ArmaSpec(p=config.p or 0, q=config.q or 0, zero_ma=config.zero_ma)
        logger.info(f"Using requested {spec.label()}")
        return fit_arma(returns, spec, seed=config.seed), None
    if config.zero_ma:
        raise InputError("--zero-ma needs an explicit --q")
    selection = select_order(returns, config.pmax, config.qmax, config.criterion, seed=config.seed)
    return selection.best_fit, selection


def cmd_arma(config: RunConfig) -> Report:
    logger.info("🚀 Starting ARMA pipeline")

    # Step 1: Load prices and compute log returns
    logger.info("Step 1: Loading log returns")
    prices, returns = load_returns(config)
    actual = None
    if config.holdout:
        if config.holdout >= len(returns):
            raise InputError(f"holdout {config.holdout} leaves no data to fit")
        actual = returns.values[-config.holdout :]
        labels = returns.labels[: -config.holdout] if returns.labels else None
        returns = returns.with_values(returns.values[: -config.holdout], labels=labels)
        logger.info(f"Holding out the last {config.holdout} returns")

    # Step 2: Stationarity
    logger.info(f"Step 2: ADF test with {ADF_LAG} lags")
    adf = adf_test(returns, ADF_LAG)

    # Step 3: Order selection and estimation
    logger.info("Step 3: Identifying and fitting the mean model")
    fit, selection = mean_model(returns, config)

    # Step 4: Residual checks
    logger.info("Step 4: Residual white-noise checks")
    resid = residuals(fit)
    fitdf = fit.spec.n_coefs
    lags = usable_lags(config.white_noise_lags, fit.n, fitdf)
    ljung = portmanteau_table(resid, lags, fitdf=fitdf, method="ljung_box")
    pierce = portmanteau_table(resid, lags, fitdf=fitdf, method="box_pierce")

    # Step 5: Forecast
    h = config.holdout or config.horizon or FORECAST_HORIZON
    logger.info(f"Step 5: {h}-step forecast")
    path = forecast(fit, h)
    evaluation = evaluate_forecast(path, actual) if actual is not None else None

    text = _render(prices.name, adf, fit, selection, ljung, pierce, path, evaluation)
    data = {
        "command": "arma",
        "series": prices.name,
        "adf": adf,
        "fit": fit,
        "selection": selection,
        "ljung_box": ljung,
        "box_pierce": pierce,
        "forecast": path,
        "evaluation": evaluation,
    }

    # Step 6: Write outputs
    logger.info("Step 6: Writing outputs")
    writer = ReportWriter(config.out_dir, config.formats)
    writer.text("arma.txt", text)
    writer.json("arma.json", data)
    writer.json("arma_fit.json", fit)
    writer.csv("forecast.csv", ["step", "forecast", "std_error"], path.to_rows())
    writer.csv("residuals.csv", ["index", "residual"], enumerate(resid.values))
    if selection is not None:
        writer.csv("selection.csv", ["p", "q", "aic", "bic", "converged"],
                   [(s.p, s.q, s.aic, s.bic, s.converged) for s in selection.scores])
    writer.chart("forecast.svg", charts.line_chart, range(1, h + 1),
                 _forecast_lines(path, evaluation), title=f"{fit.spec.label()} forecast", xlabel="step")

    logger.info(f"✅ ARMA pipeline finished: {len(writer.files)} file(s) written")
    return Report(command="arma", text=text, data=data, files=writer.files)


def _forecast_lines(path, evaluation) -> dict:
    lines = {
        "forecast": path.point,
        "upper 95%": [m + 1.96 * s for m, s in zip(path.point, path.std_err)],
        "lower 95%": [m - 1.96 * s for m, s in zip(path.point, path.std_err)],
    }
    if evaluation is not None:
        lines["actual"] = evaluation.actual
    return lines


def _render(name, adf, fit: ArmaFit, selection, ljung, pierce, path, evaluation) -> str:
    text = f"quantset arma: {name} log returns\n"
    text += tables.section("Unit root") + tables.format_test(adf)
    if selection is not None:
        grid = selection.score_grid(max(s.p for s in selection.scores), max(s.q for s in selection.scores))
        text += tables.section("Order selection") + tables.format_score_grid(grid, selection.criterion)
    text += tables.section(f"{fit.spec.label()} estimates")
    text += tables.format_coefficients(fit.coefficients())
    text += f"log_lik\t{fit.log_lik:.4f}\nAIC\t{fit.aic:.4f}\nBIC\t{fit.bic:.4f}\nn\t{fit.n}\n"
    if ljung:
        text += tables.section("Residual checks")
        text += tables.format_portmanteau(ljung, "Ljung-Box")
        text += tables.format_portmanteau(pierce, "Box-Pierce")
    text += tables.section("Out-of-sample forecasts")
    steps = range(1, path.horizon + 1)
    text += tables.format_forecast(steps, path.point, path.std_err)
    if evaluation is not None:
        text += "Actual\t" + "\t".join(f"{v:.6g}" for v in evaluation.actual) + "\n"
        text += f"RMSE\t{evaluation.rmse:.6g}\nMAE\t{evaluation.mae:.6g}\n"
    return text
