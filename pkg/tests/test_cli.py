import math
import os

import numpy as np
import pytest

from arma.simulate import simulate_arma
from config import EACF_AR_MAX, EACF_MA_MAX
from conftest import prices_from_returns, write_price_csv
from main import build_parser, config_from_args, main
from reports.output import ReportWriter, canonical_json, load_json
from risk.parametric import risk_table
from series_core.load import load_csv
from series_core.models import ColumnMap
from series_core.transform import demean, log_returns
from stattests.eacf import eacf


def run(*argv) -> int:
    return main([str(a) for a in argv])


def read(path) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


# -----------------------------
# Argument handling
# -----------------------------
def test_parser_defaults_and_lists(monkeypatch):
    monkeypatch.setenv("QUANTSET_SEED", "7")
    args = build_parser().parse_args(["risk", "--mu", "0.001", "--sigma", "0.01", "--probs", "0.9,0.99"])
    run_config = config_from_args(args)
    assert run_config.probs == (0.9, 0.99)
    assert run_config.seed == 7
    assert run_config.formats == ("text", "json", "csv")


def test_var_maps_all_four_price_columns():
    args = build_parser().parse_args(["var", "--input", "x.csv", "--ordering", "Open,Close,High,Low"])
    run_config = config_from_args(args)
    assert run_config.column_map.price_columns() == {"close": "Close", "open": "Open", "high": "High", "low": "Low"}
    assert run_config.ordering == ("Open", "Close", "High", "Low")


def test_unknown_format_is_a_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(["describe", "--format", "pdf"])
    assert excinfo.value.code == 2


# -----------------------------
# describe
# -----------------------------
def test_describe_small_file(tmp_path, capsys):
    closes = [100.0, 101.5, 100.8, 102.2, 103.0, 102.1, 104.4, 103.9, 105.0, 104.2]
    csv_path = write_price_csv(tmp_path / "ten.csv", closes, reverse=True)
    out = tmp_path / "out"
    assert run("describe", "--input", csv_path, "--out", out) == 0

    data = load_json(out / "describe.json")
    assert data["price_summary"]["n"] == 10
    assert data["return_summary"]["n"] == 9
    assert data["return_summary"]["mean"] == pytest.approx(math.log(104.2 / 100.0) / 9, rel=1e-12)
    assert len(data["correlogram"]) == 4
    assert data["ljung_box"] is None
    assert read(out / "returns.csv").splitlines()[0] == "date,log_return"
    printed = capsys.readouterr().out.splitlines()
    assert str(out / "describe.json") in printed


def test_describe_is_deterministic(price_csv, tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert run("describe", "--input", price_csv, "--out", first) == 0
    assert run("describe", "--input", price_csv, "--out", second) == 0
    assert sorted(os.listdir(first)) == sorted(os.listdir(second))
    for name in os.listdir(first):
        assert read(first / name) == read(second / name)


def test_json_output_is_canonical(price_csv, tmp_path):
    assert run("describe", "--input", price_csv, "--out", tmp_path, "--format", "json") == 0
    text = read(tmp_path / "describe.json")
    assert load_json(tmp_path / "describe.json")["ljung_box"]["lag"] == 6
    assert canonical_json(load_json(tmp_path / "describe.json")) == text
    assert os.listdir(tmp_path).count("describe.txt") == 0


def test_missing_input_exits_with_input_error(tmp_path):
    assert run("describe", "--out", tmp_path) == 2
    assert run("describe", "--input", tmp_path / "nope.csv", "--out", tmp_path) == 2


def test_constant_prices_are_degenerate(tmp_path):
    csv_path = write_price_csv(tmp_path / "flat.csv", [50.0] * 30)
    assert run("describe", "--input", csv_path, "--out", tmp_path / "out") == 2


def test_unwritable_output_exits_with_io_error(price_csv, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    assert run("describe", "--input", price_csv, "--out", blocker) == 4


# -----------------------------
# risk
# -----------------------------
def test_risk_from_flags_reproduces_reference_rows(tmp_path):
    assert run("risk", "--mu", "0.0011", "--sigma", "0.0125", "--out", tmp_path) == 0
    lines = read(tmp_path / "risk.txt").splitlines()
    assert lines[1] == "\tprob\tVaR\tES"
    assert lines[2:] == [
        "1\t0.95\t0.0217\t0.0269",
        "2\t0.99\t0.0302\t0.0344",
        "3\t0.999\t0.0397\t0.0432",
        "4\t0.9999\t0.0476\t0.0506",
    ]
    assert load_json(tmp_path / "risk.json")["source"] == "flags"


def test_risk_with_zero_sigma(tmp_path):
    assert run("risk", "--mu", "0.002", "--sigma", "0", "--out", tmp_path, "--format", "json") == 0
    rows = load_json(tmp_path / "risk.json")["rows"]
    assert all(r["var"] == 0.002 and r["es"] == 0.002 for r in rows)


@pytest.mark.parametrize("argv", [[], ["--mu", "0.01"], ["--sigma", "0.01"], ["--mu", "0", "--sigma", "-1"],
                                  ["--mu", "0", "--sigma", "0.01", "--probs", "0.4"]])
def test_risk_input_errors(tmp_path, argv):
    assert run("risk", "--out", tmp_path, *argv) == 2


def test_risk_from_saved_arma_fit(price_csv, tmp_path):
    fit_dir = tmp_path / "fit"
    assert run("arma", "--input", price_csv, "--p", "1", "--q", "0", "--out", fit_dir, "--format", "json") == 0
    saved = load_json(fit_dir / "arma_fit.json")
    assert saved["model"] == "arma"

    out = tmp_path / "risk"
    assert run("risk", "--fit", fit_dir / "arma_fit.json", "--out", out, "--format", "json") == 0
    data = load_json(out / "risk.json")
    expected = risk_table(saved["mean_c"], math.sqrt(saved["sigma2"]), (0.95, 0.99, 0.999, 0.9999))
    assert data["source"] == "fit:arma"
    assert [r["var"] for r in data["rows"]] == pytest.approx([r.var_value for r in expected], rel=1e-12)


def test_risk_rejects_unreadable_fit(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run("risk", "--fit", bad, "--out", tmp_path) == 2
    assert run("risk", "--fit", tmp_path / "missing.json", "--out", tmp_path) == 2


# -----------------------------
# Model pipelines
# -----------------------------
def test_arma_pipeline_outputs(price_csv, tmp_path):
    assert run("arma", "--input", price_csv, "--p", "1", "--q", "0", "--horizon", "5", "--out", tmp_path) == 0
    for name in ("arma.txt", "arma.json", "arma_fit.json", "forecast.csv", "residuals.csv"):
        assert (tmp_path / name).exists()
    data = load_json(tmp_path / "arma.json")
    assert data["fit"]["p"] == 1
    ar1 = next(c["value"] for c in data["fit"]["coefficients"] if c["name"] == "ar1")
    assert 0.15 < ar1 < 0.45
    assert len(data["forecast"]["point"]) == 5
    assert len(read(tmp_path / "forecast.csv").splitlines()) == 6


def test_arma_holdout_is_evaluated(price_csv, tmp_path):
    assert run("arma", "--input", price_csv, "--p", "1", "--q", "0", "--holdout", "7", "--out", tmp_path,
               "--format", "json") == 0
    data = load_json(tmp_path / "arma.json")
    assert data["fit"]["n"] == 599 - 7
    assert data["evaluation"] is not None


def test_arma_reruns_are_byte_identical(price_csv, tmp_path):
    for out in ("a", "b"):
        assert run("arma", "--input", price_csv, "--p", "1", "--q", "0", "--seed", "5", "--out", tmp_path / out) == 0
    for name in os.listdir(tmp_path / "a"):
        assert read(tmp_path / "a" / name) == read(tmp_path / "b" / name)


def test_garch_pipeline_outputs(price_csv, tmp_path):
    assert run("garch", "--input", price_csv, "--p", "1", "--q", "0", "--horizon", "5", "--out", tmp_path) == 0
    saved = load_json(tmp_path / "volatility_fit.json")
    assert saved["model"] == "garch"
    assert saved["next_variance"] > 0
    assert len(read(tmp_path / "vol_forecast.csv").splitlines()) == 6
    assert run("risk", "--fit", tmp_path / "volatility_fit.json", "--out", tmp_path / "risk") == 0


def test_var_pipeline_outputs(ohlc_csv, tmp_path):
    assert run("var", "--input", ohlc_csv, "--out", tmp_path) == 0
    data = load_json(tmp_path / "var.json")
    assert data["fit"]["names"] == ["Close", "Open", "High", "Low"]
    assert data["stability"]["stable"] is True
    open_to_close = [g for g in data["granger"] if g["cause"] == "Open" and g["effect"] == "Close"]
    assert open_to_close[0]["p_value"] < 0.01
    fevd_lines = read(tmp_path / "fevd.csv").splitlines()
    assert fevd_lines[0] == "variable,period,std,Close,Open,High,Low"
    assert len(fevd_lines) == 1 + 4 * 10


def test_var_with_unknown_ordering(ohlc_csv, tmp_path):
    assert run("var", "--input", ohlc_csv, "--ordering", "Open,Close", "--out", tmp_path) == 2


def test_subset_ma_model_keeps_every_white_noise_lag(tmp_path):
    returns = simulate_arma(800, ma=(0.0, 0.0, 0.0, 0.0, 0.0, 0.4), sigma2=1e-4, seed=71).values
    csv_path = write_price_csv(tmp_path / "ma6.csv", prices_from_returns(returns))
    out = tmp_path / "out"
    assert run("arma", "--input", csv_path, "--p", "0", "--q", "6", "--zero-ma", "1,2,3,4,5",
               "--out", out, "--format", "json") == 0
    data = load_json(out / "arma.json")
    assert [c["name"] for c in data["fit"]["coefficients"]] == ["mean", "ma6", "sigma2"]
    for method in ("ljung_box", "box_pierce"):
        assert [r["lag"] for r in data[method]] == [6, 12, 18]
        assert [r["dof"] for r in data[method]] == [5.0, 11.0, 17.0]


def test_white_noise_lags_flag(price_csv, tmp_path):
    assert run("arma", "--input", price_csv, "--p", "1", "--q", "0", "--lags", "4,8",
               "--out", tmp_path, "--format", "json") == 0
    data = load_json(tmp_path / "arma.json")
    assert [r["lag"] for r in data["ljung_box"]] == [4, 8]
    assert [r["dof"] for r in data["box_pierce"]] == [3.0, 7.0]

    args = build_parser().parse_args(["garch", "--input", "x.csv", "--lags", "5,10"])
    assert config_from_args(args).white_noise_lags == (5, 10)
    assert run("arma", "--input", price_csv, "--lags", "0,6", "--out", tmp_path) == 2


def test_volatility_eacf_uses_squared_residuals(price_csv, tmp_path):
    assert run("garch", "--input", price_csv, "--raw-returns", "--lags", "6,12", "--out", tmp_path) == 0
    assert "\n# EACF of squared residuals\n" in read(tmp_path / "garch.txt")
    data = load_json(tmp_path / "garch.json")
    assert data["eacf"]["input"] == "squared residuals"

    resid = demean(log_returns(load_csv(str(price_csv), ColumnMap())["close"]))
    expected = eacf(resid.values**2, EACF_AR_MAX, EACF_MA_MAX)
    assert [tuple(row) for row in data["eacf"]["symbols"]] == list(expected.symbols)
    assert [r["lag"] for r in data["diagnostics"]["ljung_box_levels"]] == [6, 12]


# -----------------------------
# Writers
# -----------------------------
def test_report_writer_honours_formats(tmp_path):
    writer = ReportWriter(str(tmp_path), ["csv"])
    writer.text("a.txt", "hello\n")
    writer.json("a.json", {"b": 1, "a": np.float64(0.5)})
    writer.csv("a.csv", ["x", "y"], [(1, 2.5)])
    assert writer.files == [str(tmp_path / "a.csv")]
    assert read(tmp_path / "a.csv") == "x,y\n1,2.5\n"


def test_canonical_json_layout():
    assert canonical_json({"b": [1.0, float("nan")], "a": np.int64(3)}) == '{\n  "a": 3,\n  "b": [\n    1.0,\n    null\n  ]\n}\n'
