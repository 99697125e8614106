# arma/select.py

import sys

from tqdm import tqdm

from arma.estimate import fit_arma
from arma.models import ArmaSpec, OrderScore, SelectionResult
from series_core.models import Series
from utils.errors import ConvergenceError, InputError, QuantsetError
from utils.logger import setup_logger

logger = setup_logger(__name__)

CRITERIA = ("aic", "bic")


def select_order(
    s: Series,
    p_max: int,
    q_max: int,
    criterion: str = "aic",
    include_mean: bool = True,
    seed=None,
) -> SelectionResult:
    """
    Fit every ARMA(p, q) with p <= p_max, q <= q_max and keep the one with
    the smallest criterion. Ties go to the smaller p + q, then the smaller p.
    Cells whose fit fails are recorded and excluded.
    """
    criterion = criterion.lower()
    if criterion not in CRITERIA:
        raise InputError(f"criterion must be one of {CRITERIA}, got '{criterion}'")
    if p_max < 0 or q_max < 0:
        raise InputError(f"grid maxima must be non-negative, got ({p_max}, {q_max})")
    n = len(s)
    min_n = 10 * (p_max + q_max + 1)
    if n <= min_n:
        raise InputError(f"order grid up to ({p_max}, {q_max}) needs more than {min_n} observations, got {n}")

    cells = [(p, q) for p in range(p_max + 1) for q in range(q_max + 1)]
    logger.info(f"🔍 Searching {len(cells)} ARMA orders by {criterion.upper()}")

    scores, fits, failed = [], {}, []
    for p, q in tqdm(cells, desc="ARMA grid", unit="fit", disable=not sys.stderr.isatty()):
        spec = ArmaSpec(p=p, q=q, include_mean=include_mean)
        try:
            fit = fit_arma(s, spec, seed=seed)
        except QuantsetError as e:
            logger.warning(f"⚠️ ARMA({p},{q}) excluded from the grid: {e}")
            scores.append(OrderScore(p=p, q=q, aic=None, bic=None, converged=False, message=str(e)))
            failed.append((p, q))
            continue
        fits[(p, q)] = fit
        scores.append(OrderScore(p=p, q=q, aic=fit.aic, bic=fit.bic, converged=True))

    ranked = sorted(
        (row for row in scores if row.converged),
        key=lambda row: (row.score(criterion), row.p + row.q, row.p),
    )
    if not ranked:
        raise ConvergenceError(f"all {len(cells)} ARMA grid cells failed to fit")
    best = ranked[0]
    logger.info(f"🏁 Selected ARMA({best.p},{best.q}) with {criterion.upper()}={best.score(criterion):.4f}")
    return SelectionResult(
        spec=fits[(best.p, best.q)].spec,
        criterion=criterion,
        scores=tuple(scores),
        best_fit=fits[(best.p, best.q)],
        failed=tuple(failed),
    )
