import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import linalg, stats

from arma.estimate import build_arma_fit, fit_arma, residuals
from arma.forecast import evaluate_forecast, forecast, psi_weights
from arma.likelihood import concentrated_loglike, exact_loglike, innovations
from arma.models import ArmaFit, ArmaSpec
from arma.select import select_order
from arma.simulate import simulate_arma
from arma.transforms import (
    ar_to_pacf,
    constrain_ar,
    constrain_ma,
    is_invertible,
    is_stationary,
    max_root_modulus,
    unconstrain_ar,
)
from series_core.models import Series, SeriesKind
from stattests.portmanteau import ljung_box
from utils.errors import DegenerateDataError, InputError
from utils.helpers import derive_seeds


def arma_autocovariance(ar, ma, sigma2, n):
    psi = psi_weights(ar, ma, 4000)
    return np.array([sigma2 * np.dot(psi[: psi.size - h], psi[h:]) for h in range(n)])


# -----------------------------
# Parameter transforms
# -----------------------------
class TestTransforms:
    def test_any_real_vector_gives_a_stationary_polynomial(self, rng):
        for _ in range(50):
            u = rng.normal(0.0, 3.0, size=rng.integers(1, 7))
            assert is_stationary(constrain_ar(u))
            assert is_invertible(constrain_ma(u), strict=True)

    def test_round_trip(self, rng):
        u = rng.normal(0.0, 1.0, size=5)
        assert_allclose(unconstrain_ar(constrain_ar(u)), u, atol=1e-10)

    def test_known_pacf(self):
        assert_allclose(ar_to_pacf(np.array([1.2, -0.5])), [0.8, -0.5], atol=1e-12)

    def test_root_modulus(self):
        assert max_root_modulus(np.array([0.5])) == pytest.approx(0.5)
        assert max_root_modulus(np.array([])) == 0.0
        assert not is_stationary(np.array([1.1]))
        assert is_invertible(np.array([-1.0]))
        assert not is_invertible(np.array([-1.0]), strict=True)


class TestSpec:
    def test_subset_parameter_count(self):
        spec = ArmaSpec(0, 6, zero_ma=(5, 1, 2, 3, 4))
        assert spec.zero_ma == (1, 2, 3, 4, 5)
        assert spec.free_ma == [6]
        assert spec.is_subset
        assert spec.n_params == 3
        assert spec.n_coefs == 1
        assert ArmaSpec(2, 6, zero_ar=(1,), zero_ma=(2, 3)).n_coefs == 5

    @pytest.mark.parametrize("kwargs", [{"p": -1, "q": 0}, {"p": 25, "q": 0}, {"p": 1, "q": 1, "zero_ar": (2,)}])
    def test_invalid_specs(self, kwargs):
        with pytest.raises(InputError):
            ArmaSpec(**kwargs)


# -----------------------------
# Likelihood
# -----------------------------
@pytest.mark.parametrize(
    "ar, ma",
    [([0.5], [0.3]), ([1.2, -0.5], []), ([], [0.4, 0.2]), ([0.3], [0.0, 0.0, 0.5])],
)
def test_exact_loglike_matches_dense_gaussian_density(rng, ar, ma):
    n, mean, sigma2 = 150, 0.2, 1.3
    x = mean + simulate_arma(n, ar=ar, ma=ma, sigma2=sigma2, seed=int(rng.integers(1_000_000))).values
    cov = linalg.toeplitz(arma_autocovariance(ar, ma, sigma2, n))
    oracle = stats.multivariate_normal(mean=np.full(n, mean), cov=cov).logpdf(x)
    assert abs(exact_loglike(x, mean, ar, ma, sigma2) - oracle) < 1e-6


def test_concentrated_loglike_is_the_profile_maximum(rng):
    z = simulate_arma(200, ar=[0.4], ma=[0.2], seed=8).values
    ll, sigma2 = concentrated_loglike(z, [0.4], [0.2])
    assert ll == pytest.approx(exact_loglike(z, 0.0, [0.4], [0.2], sigma2), abs=1e-9)
    assert ll > exact_loglike(z, 0.0, [0.4], [0.2], 1.1 * sigma2)
    assert ll > exact_loglike(z, 0.0, [0.4], [0.2], 0.9 * sigma2)


def test_innovations_of_pure_ar_are_the_plain_recursion(rng):
    x = simulate_arma(300, ar=[0.6, 0.2], seed=9).values
    v, F = innovations(x, [0.6, 0.2], [])
    assert_allclose(v[2:], x[2:] - 0.6 * x[1:-1] - 0.2 * x[:-2], atol=1e-12)
    assert_allclose(F[2:], 1.0, atol=1e-12)
    assert F[0] > 1.0


def test_psi_weights_of_arma11():
    psi = psi_weights([0.6], [0.3], 6)
    assert_allclose(psi, [1.0] + [0.9 * 0.6**j for j in range(5)], atol=1e-14)


# -----------------------------
# Estimation
# -----------------------------
def test_white_noise_fit_has_closed_form(rng):
    x = rng.normal(0.5, 2.0, size=500)
    fit = fit_arma(Series(values=x, name="wn", kind=SeriesKind.LOG_RETURN), ArmaSpec(0, 0))
    assert abs(fit.mean_c - x.mean()) < 1e-6
    assert abs(fit.sigma2 - np.mean((x - x.mean()) ** 2)) < 1e-6
    assert_allclose(residuals(fit).values, x - fit.mean_c, atol=0)
    assert residuals(fit).kind == SeriesKind.RESIDUAL


def test_ar1_recovery():
    s = simulate_arma(4000, ar=[0.6], mean=0.1, seed=21)
    fit = fit_arma(s, ArmaSpec(1, 0), seed=1)
    assert abs(fit.ar[0] - 0.6) < 0.05
    assert abs(fit.mean_c - 0.1) < 0.2
    assert abs(fit.sigma2 - 1.0) < 0.08
    assert fit.std_errors["ar1"] == pytest.approx(math.sqrt((1 - 0.36) / 4000), rel=0.25)
    assert fit.aic == pytest.approx(-2 * fit.log_lik + 2 * 3)
    assert fit.bic == pytest.approx(-2 * fit.log_lik + 3 * math.log(4000))


def test_arma11_recovery():
    s = simulate_arma(5000, ar=[0.6], ma=[0.3], seed=22)
    fit = fit_arma(s, ArmaSpec(1, 1), seed=2)
    assert abs(fit.ar[0] - 0.6) < 0.08
    assert abs(fit.ma[0] - 0.3) < 0.08
    assert [row["name"] for row in fit.coefficients()] == ["mean", "ar1", "ma1", "sigma2"]


def test_fit_is_shift_equivariant():
    s = simulate_arma(1500, ar=[0.5], ma=[0.2], seed=23)
    base = fit_arma(s, ArmaSpec(1, 1), seed=3)
    shifted = fit_arma(s.with_values(s.values + 5.0), ArmaSpec(1, 1), seed=3)
    assert shifted.mean_c - base.mean_c == pytest.approx(5.0, abs=1e-4)
    assert_allclose(shifted.ar, base.ar, atol=1e-4)
    assert_allclose(shifted.ma, base.ma, atol=1e-4)
    assert shifted.log_lik == pytest.approx(base.log_lik, abs=1e-5)


def test_subset_ma_fit_keeps_zero_lags():
    s = simulate_arma(3000, ma=[0, 0, 0, 0, 0, 0.3], seed=24)
    spec = ArmaSpec(0, 6, zero_ma=(1, 2, 3, 4, 5))
    fit = fit_arma(s, spec, seed=4)
    assert fit.ma[:5] == (0.0, 0.0, 0.0, 0.0, 0.0)
    assert abs(fit.ma[5] - 0.3) < 0.07
    assert [row["name"] for row in fit.coefficients()] == ["mean", "ma6", "sigma2"]
    assert fit.to_dict()["zero_ma"] == [1, 2, 3, 4, 5]


def test_zero_mean_spec_fixes_the_mean():
    s = simulate_arma(800, ar=[0.4], seed=25)
    fit = fit_arma(s, ArmaSpec(1, 0, include_mean=False), seed=5)
    assert fit.mean_c == 0.0
    assert "mean" not in fit.std_errors


def test_fit_preconditions():
    with pytest.raises(InputError):
        fit_arma(Series(values=np.arange(30.0)), ArmaSpec(1, 1))
    with pytest.raises(DegenerateDataError):
        fit_arma(Series(values=np.ones(200)), ArmaSpec(1, 0))


# -----------------------------
# Order selection
# -----------------------------
def test_select_order_ranks_the_grid():
    s = simulate_arma(2000, ar=[1.2, -0.5], seed=26)
    result = select_order(s, 2, 2, criterion="bic", seed=6)
    assert len(result.scores) == 9
    assert (result.spec.p, result.spec.q) == (2, 0)
    converged = [row.bic for row in result.scores if row.converged]
    assert result.best_fit.bic == min(converged)
    grid = result.score_grid(2, 2)
    assert grid[2][0] == result.best_fit.bic


def test_select_order_rejects_unknown_criterion(rng):
    with pytest.raises(InputError):
        select_order(Series(values=rng.standard_normal(500)), 1, 1, criterion="hqic")


# -----------------------------
# Forecasting
# -----------------------------
def test_ma1_forecast_example():
    series = Series(values=[0.3, -0.2, 0.1, 0.4], kind=SeriesKind.LOG_RETURN)
    fit = ArmaFit(
        spec=ArmaSpec(0, 1),
        mean_c=0.0,
        ar=(),
        ma=(0.5,),
        sigma2=1.0,
        std_errors={},
        log_lik=0.0,
        aic=0.0,
        bic=0.0,
        residuals=Series(values=[0.3, -0.35, 0.275, 1.0], kind=SeriesKind.RESIDUAL),
        n=4,
        series=series,
    )
    path = forecast(fit, 4)
    assert_allclose(path.point, [0.5, 0.0, 0.0, 0.0], atol=1e-15)
    assert_allclose(path.std_err, [1.0, math.sqrt(1.25), math.sqrt(1.25), math.sqrt(1.25)], atol=1e-15)
    assert path.to_rows()[0] == (1, 0.5, 1.0)


def test_ar1_forecast_closed_form():
    s = simulate_arma(300, ar=[0.9], mean=2.0, seed=27)
    fit = build_arma_fit(s, ArmaSpec(1, 0), 2.0, [0.9], [], 1.0)
    path = forecast(fit, 10)
    x = s.values[-1]
    expected = [2.0 + 0.9**h * (x - 2.0) for h in range(1, 11)]
    assert_allclose(path.point, expected, atol=1e-12)


def test_ma_forecast_reverts_to_the_mean_after_q_steps():
    s = simulate_arma(600, ma=[0.4, 0.3], mean=0.01, seed=28)
    fit = fit_arma(s, ArmaSpec(0, 2), seed=7)
    path = forecast(fit, 7)
    assert_allclose(path.point[2:], fit.mean_c, atol=0)
    assert_allclose(path.std_err[2:], path.std_err[2], rtol=1e-14)
    expected_last = math.sqrt(fit.sigma2 * (1 + fit.ma[0] ** 2 + fit.ma[1] ** 2))
    assert path.std_err[-1] == pytest.approx(expected_last)


@pytest.mark.parametrize("h", [0, 501])
def test_forecast_horizon_bounds(h):
    s = simulate_arma(300, ar=[0.2], seed=29)
    fit = build_arma_fit(s, ArmaSpec(1, 0), 0.0, [0.2], [], 1.0)
    with pytest.raises(InputError):
        forecast(fit, h)


def test_evaluate_forecast():
    s = simulate_arma(300, ar=[0.2], seed=30)
    path = forecast(build_arma_fit(s, ArmaSpec(1, 0), 0.0, [0.2], [], 1.0), 3)
    actual = np.array(path.point) + np.array([0.1, -0.2, 0.2])
    evaluation = evaluate_forecast(path, actual)
    assert_allclose(evaluation.errors, [0.1, -0.2, 0.2], atol=1e-12)
    assert evaluation.rmse == pytest.approx(math.sqrt(0.03))
    assert evaluation.mae == pytest.approx(0.5 / 3)
    with pytest.raises(InputError):
        evaluate_forecast(path, [1.0])


# -----------------------------
# Monte Carlo properties
# -----------------------------
@pytest.mark.slow
def test_arma11_recovery_rate():
    hits = 0
    seeds = derive_seeds(31, 100)
    for seed in seeds:
        fit = fit_arma(simulate_arma(5000, ar=[0.6], ma=[0.3], seed=seed), ArmaSpec(1, 1), seed=seed)
        hits += abs(fit.ar[0] - 0.6) < 0.05 and abs(fit.ma[0] - 0.3) < 0.05 and abs(fit.sigma2 - 1) < 0.05
    assert hits / len(seeds) >= 0.9


@pytest.mark.slow
def test_residuals_at_true_parameters_are_white():
    hits = 0
    seeds = derive_seeds(32, 100)
    for seed in seeds:
        s = simulate_arma(1000, ar=[0.6], ma=[0.3], seed=seed)
        fit = build_arma_fit(s, ArmaSpec(1, 1), 0.0, [0.6], [0.3], 1.0)
        hits += ljung_box(residuals(fit), 10).p_value > 0.05
    assert hits / len(seeds) >= 0.9


@pytest.mark.slow
def test_aic_usually_picks_white_noise():
    hits = 0
    seeds = derive_seeds(33, 100)
    for seed in seeds:
        result = select_order(simulate_arma(500, seed=seed), 2, 2, criterion="aic", seed=seed)
        hits += (result.spec.p, result.spec.q) == (0, 0)
    # 0.8 less two binomial standard errors at 100 runs
    assert hits / len(seeds) >= 0.72


@pytest.mark.slow
def test_bic_recovers_ar2_order():
    hits = 0
    seeds = derive_seeds(34, 100)
    for seed in seeds:
        result = select_order(simulate_arma(5000, ar=[1.2, -0.5], seed=seed), 2, 2, criterion="bic", seed=seed)
        hits += (result.spec.p, result.spec.q) == (2, 0)
    assert hits / len(seeds) >= 0.9
