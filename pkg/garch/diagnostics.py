# garch/diagnostics.py

import numpy as np

from config import ARCH_LM_LAG, PEARSON_BINS, WHITE_NOISE_LAGS
from garch.models import EgarchFit, GarchDiagnostics, GarchFit
from stattests.heteroskedasticity import arch_lm, sign_bias
from stattests.normality import jarque_bera, pearson_gof, shapiro_wilk
from stattests.portmanteau import generalized_box
from utils.logger import setup_logger

logger = setup_logger(__name__)


def garch_diagnostics(fit: GarchFit | EgarchFit, lags=WHITE_NOISE_LAGS, arch_lag: int = ARCH_LM_LAG,
                      bins: int = PEARSON_BINS) -> GarchDiagnostics:
    """
    Residual checks on the standardized residuals z: normality, Ljung-Box on
    z and z^2 (z^2 with one degree of freedom per variance parameter),
    ARCH-LM, sign bias and Pearson goodness of fit.
    """
    z = fit.std_residuals.values
    box = generalized_box(z, lags=lags, fitdf=fit.n_params)
    notes = []
    shapiro = None
    if z.size <= 5000:
        shapiro = shapiro_wilk(z)
    else:
        notes.append(f"Shapiro-Wilk skipped: n={z.size} exceeds 5000")

    report = GarchDiagnostics(
        jarque_bera=jarque_bera(z),
        ljung_box_levels=box["levels"],
        ljung_box_squares=box["squares"],
        arch_lm=arch_lm(z, arch_lag),
        sign_bias=sign_bias(z),
        pearson_gof=pearson_gof(z, bins),
        z_variance=float(np.var(z, ddof=1)),
        shapiro_wilk=shapiro,
        notes=notes,
    )
    if not 0.9 <= report.z_variance <= 1.1:
        logger.warning(f"⚠️ Standardized residual variance {report.z_variance:.3f} is outside [0.9, 1.1]")
    return report
