# reports/garch_report.py

from arma.estimate import residuals
from config import ARCH_LM_LAG, EACF_AR_MAX, EACF_MA_MAX, FORECAST_HORIZON, HISTOGRAM_BINS
from garch.diagnostics import garch_diagnostics
from garch.estimate import fit_egarch, fit_garch, standardized_residuals
from garch.forecast import forecast_returns, forecast_variance
from reports import charts, tables
from reports.arma_report import mean_model
from reports.inputs import load_returns
from reports.models import Report, RunConfig
from reports.output import ReportWriter
from series_core.describe import histogram, qq_pairs
from series_core.transform import demean
from stattests.eacf import eacf
from stattests.heteroskedasticity import arch_lm
from stattests.normality import jarque_bera, shapiro_wilk
from utils.logger import setup_logger

logger = setup_logger(__name__)


def cmd_garch(config: RunConfig) -> Report:
    logger.info("🚀 Starting volatility pipeline")

    # Step 1: Load prices and compute log returns
    logger.info("Step 1: Loading log returns")
    prices, returns = load_returns(config)

    # Step 2: Mean model residuals (or de-meaned returns)
    arma_fit = None
    if config.raw_returns:
        logger.info("Step 2: De-meaning raw log returns")
        resid = demean(returns)
        mean_level = float(returns.values.mean())
    else:
        logger.info("Step 2: Fitting the ARMA mean model")
        arma_fit, _ = mean_model(returns, config)
        resid = residuals(arma_fit)
        mean_level = arma_fit.mean_c

    # Step 3: Normality and ARCH effects of the residuals
    logger.info("Step 3: Normality and ARCH-LM tests")
    pre_tests = [jarque_bera(resid)]
    if len(resid) <= 5000:
        pre_tests.append(shapiro_wilk(resid))
    pre_tests.append(arch_lm(resid, ARCH_LM_LAG))

    # Step 4: EACF of squared residuals
    logger.info("Step 4: EACF of squared residuals")
    eacf_table = eacf(resid.values**2, EACF_AR_MAX, EACF_MA_MAX)

    # Step 5: Volatility model
    logger.info(f"Step 5: Fitting {config.model}")
    if config.model == "egarch":
        vol_fit = fit_egarch(resid, seed=config.seed, mean=mean_level)
    else:
        vol_fit = fit_garch(resid, config.arch_order, config.garch_order, seed=config.seed, mean=mean_level)
    z = standardized_residuals(vol_fit)

    # Step 6: Diagnostics
    logger.info("Step 6: Diagnostics of standardized residuals")
    diagnostics = garch_diagnostics(vol_fit, lags=config.white_noise_lags)

    # Step 7: Forecasts
    h = config.horizon or FORECAST_HORIZON
    logger.info(f"Step 7: {h}-step volatility forecast")
    vol = forecast_variance(vol_fit, h, n_paths=config.mc_paths, seed=config.seed)
    combined = forecast_returns(arma_fit, vol_fit, h, n_paths=config.mc_paths, seed=config.seed)

    text = _render(prices.name, pre_tests, eacf_table, vol_fit, diagnostics, vol, combined)
    data = {
        "command": "garch",
        "series": prices.name,
        "mean_model": arma_fit,
        "raw_returns": config.raw_returns,
        "pre_tests": pre_tests,
        "eacf": {
            "input": "squared residuals",
            "symbols": [list(r) for r in eacf_table.symbols],
            "values": [list(r) for r in eacf_table.values],
        },
        "fit": vol_fit,
        "diagnostics": diagnostics,
        "variance_forecast": vol,
        "return_forecast": combined,
    }

    # Step 8: Write outputs
    logger.info("Step 8: Writing outputs")
    writer = ReportWriter(config.out_dir, config.formats)
    writer.text("garch.txt", text)
    writer.json("garch.json", data)
    writer.json("volatility_fit.json", vol_fit)
    writer.csv("cond_var.csv", ["index", "residual", "cond_var", "std_residual"],
               zip(range(len(resid)), resid.values, vol_fit.cond_var, z.values))
    writer.csv("vol_forecast.csv", ["step", "sigma2", "sigma"], vol.to_rows())
    writer.csv("return_forecast.csv", ["step", "mean", "sigma"], combined.to_rows())
    writer.csv("std_residual_qq.csv", ["normal_quantile", "sample"], qq_pairs(z))
    writer.csv("std_residual_histogram.csv", ["lower", "upper", "count"], histogram(z, HISTOGRAM_BINS).to_rows())
    writer.chart("cond_var.svg", charts.line_chart, range(len(resid)), {"conditional variance": vol_fit.cond_var},
                 title=f"{vol_fit.label()} conditional variance", xlabel="observation")
    writer.chart("vol_forecast.svg", charts.line_chart, range(1, h + 1), {"sigma": vol.sigma},
                 title=f"{h}-step volatility forecast", xlabel="step")
    writer.chart("std_residual_qq.svg", charts.scatter_chart, qq_pairs(z),
                 title="Normal Q-Q plot of standardized residuals", xlabel="normal quantile", ylabel="sample")

    logger.info(f"✅ volatility pipeline finished: {len(writer.files)} file(s) written")
    return Report(command="garch", text=text, data=data, files=writer.files)


def _render(name, pre_tests, eacf_table, vol_fit, diagnostics, vol, combined) -> str:
    text = f"quantset garch: {name} log returns\n"
    text += tables.section("Residual tests")
    text += "".join(tables.format_test(r) for r in pre_tests)
    text += tables.section("EACF of squared residuals") + eacf_table.to_text()
    text += tables.section(f"{vol_fit.label()} estimates")
    text += tables.format_coefficients(vol_fit.coefficients())
    text += f"log_lik\t{vol_fit.log_lik:.4f}\n"
    if hasattr(vol_fit, "persistence"):
        text += f"persistence\t{vol_fit.persistence:.6f}\n"
    text += tables.section("Standardized residual diagnostics")
    text += "".join(tables.format_test(r) for r in diagnostics.all_results())
    text += f"variance of standardized residuals\t{diagnostics.z_variance:.4f}\n"
    text += "".join(f"note: {note}\n" for note in diagnostics.notes)
    text += tables.section("Volatility forecast")
    steps = range(1, vol.horizon + 1)
    text += tables.format_forecast(steps, vol.sigma2, vol.sigma, point_label="sigma2", err_label="sigma")
    text += tables.section("Return forecast")
    text += tables.format_forecast(steps, combined.mean, combined.sigma, point_label="mean", err_label="sigma")
    return text
