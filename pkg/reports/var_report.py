# reports/var_report.py

from config import FEVD_HORIZON, IRF_HORIZON, VAR_FORECAST_HORIZON
from reports import charts, tables
from reports.inputs import load_table
from reports.models import Report, RunConfig
from reports.output import ReportWriter
from utils.logger import setup_logger
from var_system.analysis import fevd, irf, stability_roots
from var_system.estimate import fit_var
from var_system.forecast import var_forecast
from var_system.granger import granger_table
from var_system.models import MultiSeries

logger = setup_logger(__name__)


def cmd_var(config: RunConfig) -> Report:
    logger.info("🚀 Starting VAR pipeline")

    # Step 1: Load the price columns
    logger.info("Step 1: Loading price columns")
    table = load_table(config)
    system = MultiSeries.from_price_table(table)

    # Step 2: Estimation
    logger.info(f"Step 2: Fitting VAR({config.var_lag}) on {list(system.names)}")
    fit = fit_var(system, config.var_lag)

    # Step 3: Granger causality
    logger.info("Step 3: Pairwise Granger causality")
    granger = granger_table(system, config.var_lag)

    # Step 4: Stability
    logger.info("Step 4: Stability roots")
    stability = stability_roots(fit)
    if not stability.stable:
        logger.warning(f"⚠️ VAR is not stable: largest root modulus {stability.moduli[0]:.6f}")

    # Step 5: Impulse responses and variance decomposition
    ordering = config.ordering or fit.names
    logger.info(f"Step 5: IRF and FEVD with ordering {list(ordering)}")
    responses = irf(fit, IRF_HORIZON, ordering)
    decomposition = fevd(fit, FEVD_HORIZON, ordering)

    # Step 6: Forecast
    h = config.horizon or VAR_FORECAST_HORIZON
    logger.info(f"Step 6: {h}-step forecast")
    path = var_forecast(fit, h)

    text = _render(fit, granger, stability, decomposition, path)
    data = {
        "command": "var",
        "fit": fit,
        "granger": granger,
        "stability": stability,
        "irf": responses,
        "fevd": decomposition,
        "forecast": path,
    }

    # Step 7: Write outputs
    logger.info("Step 7: Writing outputs")
    writer = ReportWriter(config.out_dir, config.formats)
    writer.text("var.txt", text)
    writer.json("var.json", data)
    writer.csv("granger.csv", ["cause", "effect", "f_statistic", "p_value", "stars"],
               [(r.cause, r.effect, r.result.statistic, r.result.p_value, r.stars) for r in granger])
    writer.csv("stability.csv", ["real", "imag", "modulus"],
               [(e.real, e.imag, m) for e, m in zip(stability.eigenvalues, stability.moduli)])
    writer.csv("irf.csv", ["horizon", "shock", "response", "value"], responses.to_rows())
    fevd_rows = [(name, *row) for name in decomposition.names for row in decomposition.rows_for(name)]
    writer.csv("fevd.csv", ["variable", "period", "std", *decomposition.names], fevd_rows)
    writer.csv("forecast.csv", ["step", *path.names], [(k + 1, *path.values[k]) for k in range(h)])
    shock = responses.names[0]
    writer.chart(
        "irf.svg",
        charts.line_chart,
        range(responses.horizon + 1),
        {name: responses.responses[:, i, 0] for i, name in enumerate(responses.names)},
        title=f"Responses to a one standard deviation {shock} shock",
        xlabel="horizon",
    )

    logger.info(f"✅ VAR pipeline finished: {len(writer.files)} file(s) written")
    return Report(command="var", text=text, data=data, files=writer.files)


def _render(fit, granger, stability, decomposition, path) -> str:
    text = f"quantset var: VAR({fit.lag_order}) on {', '.join(fit.names)}\n"
    text += tables.section("Equations")
    for name in fit.names:
        terms = " ".join(f"{v:+.6f}*{k}" for k, v in fit.equation(name).items() if k != "const")
        text += f"{name} = {fit.intercepts[fit.names.index(name)]:.6f} {terms}\n"
    text += tables.section("Granger causality") + tables.format_granger(granger)
    text += tables.section("Stability") + tables.format_stability(stability)
    text += tables.section("Variance decomposition") + tables.format_fevd(decomposition)
    text += tables.section("Forecast")
    lines = ["step\t" + "\t".join(path.names)]
    for k in range(path.horizon):
        lines.append(f"{k + 1}\t" + "\t".join(f"{v:.6f}" for v in path.values[k]))
    return text + "\n".join(lines) + "\n"
