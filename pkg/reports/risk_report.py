# reports/risk_report.py

import math

from reports.models import Report, RunConfig
from reports.output import ReportWriter, load_json
from risk.parametric import format_risk_table, risk_table
from utils.errors import InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def moments_from_fit(saved: dict) -> tuple[float, float]:
    """
    (mu, sigma) from a saved fit: an ARMA fit gives (mean_c, sqrt(sigma2)),
    a volatility fit gives (stored mean, sqrt(one-step variance forecast)).
    """
    model = saved.get("model")
    try:
        if model == "arma":
            return float(saved["mean_c"]), math.sqrt(float(saved["sigma2"]))
        if model in ("garch", "egarch"):
            return float(saved["mean"]), math.sqrt(float(saved["next_variance"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"saved {model} fit is missing a field: {e}") from None
    raise InputError(f"cannot derive mu and sigma from a saved '{model}' model")


def resolve_moments(config: RunConfig) -> tuple[float, float, str]:
    if config.mu is not None and config.sigma is not None:
        return config.mu, config.sigma, "flags"
    if config.mu is not None or config.sigma is not None:
        raise InputError("--mu and --sigma must be given together")
    if config.fit_path:
        try:
            saved = load_json(config.fit_path)
        except FileNotFoundError:
            raise InputError(f"fit file not found: {config.fit_path}") from None
        except ValueError as e:
            raise InputError(f"fit file {config.fit_path} is not valid JSON: {e}") from None
        mu, sigma = moments_from_fit(saved)
        return mu, sigma, f"fit:{saved.get('model')}"
    raise InputError("risk needs --mu and --sigma, or --fit with a saved model")


def cmd_risk(config: RunConfig) -> Report:
    logger.info("🚀 Starting risk table")

    # Step 1: Mean and volatility
    mu, sigma, source = resolve_moments(config)
    logger.info(f"Step 1: mu={mu:.6g}, sigma={sigma:.6g} from {source}")

    # Step 2: VaR and ES per probability
    logger.info("Step 2: Normal VaR and ES")
    rows = risk_table(mu, sigma, config.probs)

    text = format_risk_table(rows, title=f"VaR and ES (mu={mu:g}, sigma={sigma:g})")
    data = {"command": "risk", "mu": mu, "sigma": sigma, "source": source, "rows": rows}

    # Step 3: Write outputs
    logger.info("Step 3: Writing outputs")
    writer = ReportWriter(config.out_dir, config.formats)
    writer.text("risk.txt", text)
    writer.json("risk.json", data)
    writer.csv("risk.csv", ["prob", "var", "es"], [(r.prob, r.var_value, r.es_value) for r in rows])

    logger.info(f"✅ risk table finished: {len(writer.files)} file(s) written")
    return Report(command="risk", text=text, data=data, files=writer.files)
