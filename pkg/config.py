# config.py

"""
Configuration file for quantset
Modify these settings to change pipeline defaults. Environment variables
(or a .env file in the working directory) override the values marked below,
and CLI flags override both.
"""

import os

from dotenv import load_dotenv

load_dotenv()

# 🎲 Reproducibility (QUANTSET_SEED overrides)
DEFAULT_SEED = 42


def default_seed() -> int:
    return int(os.getenv("QUANTSET_SEED", DEFAULT_SEED))


SEED = default_seed()

# 📥 CSV ingestion
DATE_FORMAT = "%Y-%m-%d"
DATE_COL = "Date"
OPEN_COL = "Open"
HIGH_COL = "High"
LOW_COL = "Low"
CLOSE_COL = "Close"

# 🔎 Identification and testing
CORRELOGRAM_MAX_LAG = 20
ADF_LAG = 9
LJUNG_BOX_LAG = 6
WHITE_NOISE_LAGS = (6, 12, 18)
ARCH_LM_LAG = 12   # lag of the heteroskedasticity test is not given in the source study
EACF_AR_MAX = 7
EACF_MA_MAX = 13
PEARSON_BINS = 20
HISTOGRAM_BINS = 30

# 📈 ARMA
ARMA_PMAX = 6
ARMA_QMAX = 6
ARMA_CRITERION = "aic"
MAX_ARMA_ORDER = 24

# 🌪️ Volatility models
GARCH_ARCH_ORDER = 1
GARCH_GARCH_ORDER = 1
MIN_VOL_OBS = 250
EGARCH_FORECAST_PATHS = 10000

# 🔗 VAR
VAR_LAG = 1
IRF_HORIZON = 10
FEVD_HORIZON = 10

# ⏭️ Forecasting and risk
FORECAST_HORIZON = 7
VAR_FORECAST_HORIZON = 5
MAX_HORIZON = 500
RISK_PROBS = (0.95, 0.99, 0.999, 0.9999)

# ⚙️ Optimizer
OPT_MAX_ITER = 500
OPT_FTOL = 1e-10    # relative log-likelihood change
OPT_RESTARTS = 3
OPT_JITTER = 0.1

# 💾 Output (QUANTSET_OUTPUT_DIR overrides)
OUTPUT_DIR = os.getenv("QUANTSET_OUTPUT_DIR", "output")
OUTPUT_FORMATS = ("text", "json", "csv")
CHART_SIZE_IN = (8, 4)
CHART_DPI = 100

# 🪵 Logging (QUANTSET_LOG_LEVEL overrides)
LOG_LEVEL = os.getenv("QUANTSET_LOG_LEVEL", "INFO")
