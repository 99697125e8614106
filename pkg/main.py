import argparse
import sys

import config
from reports.arma_report import cmd_arma
from reports.describe import cmd_describe
from reports.garch_report import cmd_garch
from reports.models import ALL_FORMATS, RunConfig
from reports.risk_report import cmd_risk
from reports.var_report import cmd_var
from series_core.models import ColumnMap
from utils.errors import IO_EXIT_CODE, QuantsetError
from utils.logger import setup_logger

logger = setup_logger("quantset")

COMMANDS = {
    "describe": cmd_describe,
    "arma": cmd_arma,
    "garch": cmd_garch,
    "risk": cmd_risk,
    "var": cmd_var,
}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'") from None


def _name_list(text: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in text.split(",") if v.strip())


def _format_list(text: str) -> tuple[str, ...]:
    formats = _name_list(text)
    unknown = [f for f in formats if f not in ALL_FORMATS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown format(s) {unknown}; choose from {ALL_FORMATS}")
    return formats


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="CSV file with a header row")
    common.add_argument("--date-col", default=config.DATE_COL)
    common.add_argument("--open-col", default=None)
    common.add_argument("--high-col", default=None)
    common.add_argument("--low-col", default=None)
    common.add_argument("--close-col", default=config.CLOSE_COL)
    common.add_argument("--date-format", default=config.DATE_FORMAT)
    common.add_argument("--seed", type=int, default=None, help="master seed (default: QUANTSET_SEED or 42)")
    common.add_argument("--out", default=config.OUTPUT_DIR, help="output directory")
    common.add_argument("--format", type=_format_list, default=config.OUTPUT_FORMATS,
                        help=f"comma-separated subset of {','.join(ALL_FORMATS)}")
    common.add_argument("--horizon", type=int, default=None)

    mean_model = argparse.ArgumentParser(add_help=False)
    mean_model.add_argument("--p", type=int, default=None)
    mean_model.add_argument("--q", type=int, default=None)
    mean_model.add_argument("--pmax", type=int, default=config.ARMA_PMAX)
    mean_model.add_argument("--qmax", type=int, default=config.ARMA_QMAX)
    mean_model.add_argument("--criterion", choices=("aic", "bic"), default=config.ARMA_CRITERION)
    mean_model.add_argument("--zero-ma", type=_int_list, default=(), help="MA lags fixed at zero, e.g. 1,2,3,4,5")
    mean_model.add_argument("--lags", dest="white_noise_lags", type=_int_list, default=config.WHITE_NOISE_LAGS,
                            help="residual white-noise test lags, e.g. 6,12,18")

    parser = argparse.ArgumentParser(description="quantset: financial time-series econometrics")
    sub = parser.add_subparsers(dest="command", required=True)

    describe = sub.add_parser("describe", parents=[common], help="Summary statistics and correlogram")
    describe.add_argument("--lags", type=int, default=None, help="correlogram lags")

    arma = sub.add_parser("arma", parents=[common, mean_model], help="ARMA identification, fit and forecast")
    arma.add_argument("--holdout", type=int, default=0, help="fit without the last N returns and compare")

    garch = sub.add_parser("garch", parents=[common, mean_model], help="GARCH/eGARCH volatility pipeline")
    garch.add_argument("--model", choices=("garch", "egarch"), default="garch")
    garch.add_argument("--arch-order", type=int, default=config.GARCH_ARCH_ORDER)
    garch.add_argument("--garch-order", type=int, default=config.GARCH_GARCH_ORDER)
    garch.add_argument("--raw-returns", action="store_true", help="fit on de-meaned returns, not ARMA residuals")
    garch.add_argument("--paths", type=int, default=config.EGARCH_FORECAST_PATHS, help="eGARCH Monte Carlo paths")

    risk = sub.add_parser("risk", parents=[common], help="Normal VaR and ES table")
    risk.add_argument("--mu", type=float, default=None)
    risk.add_argument("--sigma", type=float, default=None)
    risk.add_argument("--fit", default=None, help="saved arma_fit.json or volatility_fit.json")
    risk.add_argument("--probs", type=_float_list, default=config.RISK_PROBS)

    var = sub.add_parser("var", parents=[common], help="VAR, Granger, stability, IRF, FEVD, forecast")
    var.add_argument("--var-lag", type=int, default=config.VAR_LAG)
    var.add_argument("--ordering", type=_name_list, default=None, help="Cholesky ordering, e.g. Close,Open,High,Low")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "var":
        column_map = ColumnMap(
            date=args.date_col,
            open=args.open_col or config.OPEN_COL,
            high=args.high_col or config.HIGH_COL,
            low=args.low_col or config.LOW_COL,
            close=args.close_col,
        )
    else:
        column_map = ColumnMap(date=args.date_col, open=args.open_col, high=args.high_col, low=args.low_col,
                               close=args.close_col)
    options = {
        "command": args.command,
        "input_path": args.input,
        "column_map": column_map,
        "date_format": args.date_format,
        "out_dir": args.out,
        "formats": tuple(args.format),
        "seed": args.seed if args.seed is not None else config.default_seed(),
        "horizon": args.horizon,
    }
    optional = {
        "p": "p", "q": "q", "pmax": "pmax", "qmax": "qmax", "criterion": "criterion", "zero_ma": "zero_ma",
        "holdout": "holdout", "lags": "lags", "model": "model", "arch_order": "arch_order",
        "garch_order": "garch_order", "raw_returns": "raw_returns", "paths": "mc_paths", "mu": "mu",
        "sigma": "sigma", "fit": "fit_path", "probs": "probs", "var_lag": "var_lag", "ordering": "ordering",
        "white_noise_lags": "white_noise_lags",
    }
    for arg_name, field_name in optional.items():
        if hasattr(args, arg_name):
            options[field_name] = getattr(args, arg_name)
    return RunConfig(**options)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run_config = config_from_args(args)
        report = COMMANDS[args.command](run_config)
    except QuantsetError as e:
        logger.error(f"❌ {args.command} failed: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"❌ {args.command} could not write its outputs: {e}")
        return IO_EXIT_CODE
    for path in report.files:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
