import numpy as np
import pytest
from numpy.testing import assert_allclose

from series_core.models import Series, SeriesKind
from utils.errors import DegenerateDataError, InputError
from utils.helpers import derive_seeds
from var_system.analysis import fevd, irf, ma_matrices, stability_roots, unconditional_mean
from var_system.estimate import companion_matrix, fit_var, var_regressors
from var_system.forecast import var_forecast
from var_system.granger import granger_table, granger_test, significance_stars
from var_system.models import MultiSeries, VarFit
from var_system.simulate import simulate_var


def make_fit(coef, intercepts=None, cov=None, data=None) -> VarFit:
    """VarFit with given parameters, for properties that do not depend on estimation."""
    coef = np.asarray(coef, dtype=float)
    if coef.ndim == 2:
        coef = coef[None]
    p, k, _ = coef.shape
    return VarFit(
        lag_order=p,
        names=tuple(f"y{i + 1}" for i in range(k)),
        intercepts=np.zeros(k) if intercepts is None else np.asarray(intercepts, dtype=float),
        coef=coef,
        resid_cov=np.eye(k) if cov is None else np.asarray(cov, dtype=float),
        companion=companion_matrix(coef),
        n_effective=100,
        residuals=np.zeros((100, k)),
        data=np.zeros((p, k)) if data is None else np.asarray(data, dtype=float),
    )


def random_stable_coef(rng, p, k, radius=0.9):
    while True:
        coef = rng.normal(0.0, 0.3, size=(p, k, k))
        if np.max(np.abs(np.linalg.eigvals(companion_matrix(coef)))) < radius:
            return coef


# -----------------------------
# Containers
# -----------------------------
def test_multiseries_validation():
    a = Series(values=[1.0, 2.0, 3.0], name="a")
    with pytest.raises(InputError):
        MultiSeries(components=(a,))
    with pytest.raises(InputError):
        MultiSeries(components=(a, Series(values=[1.0, 2.0], name="b")))
    with pytest.raises(InputError):
        MultiSeries(components=(a, Series(values=[1.0, 2.0, 4.0], name="a")))
    m = MultiSeries(components=(a, Series(values=[3.0, 1.0, 2.0], name="b")))
    assert m.names == ("a", "b") and m.k == 2 and m.n == 3
    assert m.select(["b", "a"]).names == ("b", "a")
    with pytest.raises(InputError):
        m.index_of("c")


def test_regressor_layout():
    y = np.arange(10.0).reshape(5, 2)
    X = var_regressors(y, 2)
    assert X.shape == (3, 5)
    assert_allclose(X[0], [1, 2, 3, 0, 1])


# -----------------------------
# Estimation
# -----------------------------
def test_var1_recovery():
    m = simulate_var(5000, 0.5 * np.eye(2), seed=61)
    fit = fit_var(m, 1)
    assert_allclose(fit.coef[0], 0.5 * np.eye(2), atol=0.05)
    assert_allclose(fit.resid_cov, np.eye(2), atol=0.1)
    assert fit.n_effective == 4999
    assert fit.equation("y1")["y2_lag1"] == pytest.approx(fit.coef[0, 0, 1])


def test_var_coefficients_match_per_equation_least_squares(rng):
    m = simulate_var(300, random_stable_coef(rng, 2, 3), intercepts=[1.0, 0.0, -1.0], seed=62)
    fit = fit_var(m, 2)
    y = m.matrix()
    X = np.column_stack([np.ones(298), y[1:-1], y[:-2]])
    B, *_ = np.linalg.lstsq(X, y[2:], rcond=None)
    assert_allclose(fit.intercepts, B[0], atol=1e-10)
    assert_allclose(fit.coef[0], B[1:4].T, atol=1e-10)
    assert_allclose(fit.coef[1], B[4:7].T, atol=1e-10)
    resid = y[2:] - X @ B
    assert_allclose(fit.resid_cov, resid.T @ resid / (298 - 7), atol=1e-10)


def test_identical_components_are_singular(rng):
    x = rng.standard_normal(200)
    m = MultiSeries(components=(Series(values=x, name="a"), Series(values=x, name="b")))
    with pytest.raises(DegenerateDataError):
        fit_var(m, 1)


def test_var_needs_enough_observations(rng):
    m = simulate_var(12, 0.5 * np.eye(2), seed=63)
    with pytest.raises(InputError):
        fit_var(m, 1)
    with pytest.raises(InputError):
        fit_var(simulate_var(200, 0.5 * np.eye(2), seed=63), 0)


# -----------------------------
# Stability
# -----------------------------
def test_stability_of_diagonal_systems():
    report = stability_roots(make_fit(0.5 * np.eye(2)))
    assert_allclose(report.moduli, [0.5, 0.5])
    assert report.stable
    report = stability_roots(make_fit(np.diag([1.1, 0.3])))
    assert report.moduli[0] == pytest.approx(1.1)
    assert not report.stable


def test_companion_eigenvalues_solve_the_lag_polynomial(rng):
    coef = random_stable_coef(rng, 2, 2)
    report = stability_roots(make_fit(coef))
    assert len(report.eigenvalues) == 4
    # each eigenvalue solves det(lambda^2 I - lambda A1 - A2) = 0
    for lam in report.eigenvalues:
        assert abs(np.linalg.det(lam**2 * np.eye(2) - lam * coef[0] - coef[1])) < 1e-10
    assert list(report.moduli) == sorted(report.moduli, reverse=True)


def test_unconditional_mean():
    fit = make_fit(0.5 * np.eye(2), intercepts=[1.0, 2.0])
    assert_allclose(unconditional_mean(fit), [2.0, 4.0])


# -----------------------------
# Impulse responses and FEVD
# -----------------------------
def test_irf_of_diagonal_var():
    response = irf(make_fit(0.5 * np.eye(2)), 6)
    for h in range(7):
        assert_allclose(response.responses[h], 0.5**h * np.eye(2), atol=1e-15)
    rows = response.to_rows()
    assert rows[0] == (0, "y1", "y1", 1.0)


def test_irf_horizon_zero_is_the_cholesky_factor(rng):
    cov = np.array([[2.0, 0.6, 0.2], [0.6, 1.0, 0.3], [0.2, 0.3, 1.5]])
    fit = make_fit(random_stable_coef(rng, 1, 3), cov=cov)
    response = irf(fit, 4)
    assert_allclose(response.responses[0], np.linalg.cholesky(cov), atol=1e-12)


def test_irf_is_matrix_power_times_cholesky(rng):
    A = random_stable_coef(rng, 1, 3)[0]
    cov = np.array([[1.0, 0.4, 0.0], [0.4, 1.0, 0.2], [0.0, 0.2, 1.0]])
    response = irf(make_fit(A, cov=cov), 8)
    L = np.linalg.cholesky(cov)
    for h in range(9):
        assert_allclose(response.responses[h], np.linalg.matrix_power(A, h) @ L, atol=1e-10)


def test_irf_ordering_permutes_the_system(rng):
    A = random_stable_coef(rng, 1, 2)[0]
    cov = np.array([[1.0, 0.5], [0.5, 2.0]])
    response = irf(make_fit(A, cov=cov), 3, ordering=["y2", "y1"])
    assert response.names == ("y2", "y1")
    assert_allclose(response.responses[0], np.linalg.cholesky(cov[::-1, ::-1]), atol=1e-12)
    with pytest.raises(InputError):
        irf(make_fit(A, cov=cov), 3, ordering=["y1", "y3"])


def test_irf_rejects_indefinite_covariance():
    with pytest.raises(DegenerateDataError):
        irf(make_fit(0.5 * np.eye(2), cov=[[1.0, 2.0], [2.0, 1.0]]), 3)


def test_ma_matrices_of_var2(rng):
    coef = random_stable_coef(rng, 2, 2)
    phi = ma_matrices(coef, 3)
    assert_allclose(phi[1], coef[0])
    assert_allclose(phi[2], phi[1] @ coef[0] + coef[1], atol=1e-14)


def test_fevd_rows_sum_to_one_hundred(rng):
    cov = np.array([[1.0, 0.3, 0.1], [0.3, 2.0, 0.4], [0.1, 0.4, 0.5]])
    table = fevd(make_fit(random_stable_coef(rng, 2, 3), cov=cov), 10)
    assert_allclose(table.shares.sum(axis=2), 100.0, atol=1e-9)
    assert_allclose(table.shares[0, 0], [100.0, 0.0, 0.0], atol=1e-12)
    assert len(table.rows_for("y2")) == 10


def test_fevd_of_diagonal_system_is_all_own_share():
    table = fevd(make_fit(np.diag([0.6, 0.2])), 5)
    for h in range(5):
        assert_allclose(table.shares[h], 100.0 * np.eye(2), atol=1e-12)
    assert table.std[0, 0] == pytest.approx(1.0)
    assert table.std[1, 0] == pytest.approx(np.sqrt(1.0 + 0.36))


# -----------------------------
# Forecasting
# -----------------------------
def test_forecast_of_intercept_only_var():
    fit = make_fit(np.zeros((2, 2)), intercepts=[1.5, -2.0], data=[[9.0, 9.0]])
    assert_allclose(var_forecast(fit, 4).values, [[1.5, -2.0]] * 4)


def test_forecast_matches_matrix_geometric_closed_form(rng):
    A = random_stable_coef(rng, 1, 3)[0]
    c = np.array([0.5, -0.2, 1.0])
    last = np.array([2.0, -1.0, 0.5])
    result = var_forecast(make_fit(A, intercepts=c, data=[last]), 6)
    for h in range(1, 7):
        geometric = sum(np.linalg.matrix_power(A, i) for i in range(h)) @ c
        assert_allclose(result.values[h - 1], np.linalg.matrix_power(A, h) @ last + geometric, atol=1e-10)
    assert_allclose(result.path("y2"), result.values[:, 1])


def test_forecast_horizon_bounds():
    with pytest.raises(InputError):
        var_forecast(make_fit(0.5 * np.eye(2), data=[[0.0, 0.0]]), 0)


# -----------------------------
# Granger causality
# -----------------------------
def one_way_pair(seed, n=2000):
    g = np.random.default_rng(seed)
    x = g.standard_normal(n)
    y = np.empty(n)
    y[0] = g.standard_normal()
    y[1:] = 0.8 * x[:-1] + g.standard_normal(n - 1)
    return MultiSeries(components=(Series(values=x, name="x"), Series(values=y, name="y")))


def test_granger_detects_planted_direction():
    m = one_way_pair(64)
    forward = granger_test(m, "x", "y", 2)
    assert forward.p_value < 0.01
    assert forward.dof == (2.0, float(2000 - 2 - 2 * 2 - 1))


def test_granger_is_invariant_to_affine_rescaling():
    m = one_way_pair(65, n=500)
    x, y = (c.values for c in m.components)
    scaled = MultiSeries(components=(Series(values=3.0 * x - 1.0, name="x"), Series(values=0.5 * y + 7.0, name="y")))
    assert granger_test(scaled, "x", "y", 3).statistic == pytest.approx(granger_test(m, "x", "y", 3).statistic, rel=1e-8)


def test_granger_table_covers_every_ordered_pair():
    m = simulate_var(500, 0.3 * np.eye(3), seed=66)
    rows = granger_table(m, 1)
    assert [(r.cause, r.effect) for r in rows] == [
        ("y1", "y2"), ("y1", "y3"), ("y2", "y1"), ("y2", "y3"), ("y3", "y1"), ("y3", "y2"),
    ]
    assert rows[0].to_dict()["dof"] == [1.0, 500.0 - 1 - 2 - 1]


def test_granger_rejects_same_component():
    with pytest.raises(InputError):
        granger_test(one_way_pair(67, n=100), "x", "x", 1)


@pytest.mark.parametrize("p, stars", [(0.001, "***"), (0.03, "**"), (0.07, "*"), (0.2, "")])
def test_significance_stars(p, stars):
    assert significance_stars(p) == stars


def test_price_levels_are_accepted_with_a_warning(rng):
    levels = 100.0 + np.cumsum(rng.standard_normal((300, 2)), axis=0)
    m = MultiSeries(components=tuple(
        Series(values=levels[:, i], name=n, kind=SeriesKind.PRICE) for i, n in enumerate(("Close", "Open"))
    ))
    assert fit_var(m, 1).names == ("Close", "Open")


# -----------------------------
# Monte Carlo properties
# -----------------------------
@pytest.mark.slow
def test_granger_one_way_causality_rates():
    seeds = derive_seeds(68, 200)
    forward = sum(granger_test(one_way_pair(s), "x", "y", 1).p_value < 0.01 for s in seeds)
    reverse = sum(granger_test(one_way_pair(s), "y", "x", 1).p_value > 0.05 for s in seeds)
    assert forward / len(seeds) >= 0.99
    assert reverse / len(seeds) >= 0.85


@pytest.mark.slow
def test_granger_size_on_independent_noise():
    hits = 0
    seeds = derive_seeds(69, 200)
    for seed in seeds:
        g = np.random.default_rng(seed)
        m = MultiSeries(components=(Series(values=g.standard_normal(2000), name="a"),
                                    Series(values=g.standard_normal(2000), name="b")))
        hits += granger_test(m, "a", "b", 2).p_value > 0.05
    assert hits / len(seeds) >= 0.9


@pytest.mark.slow
def test_var1_recovery_rate():
    seeds = derive_seeds(70, 100)
    hits = sum(np.max(np.abs(fit_var(simulate_var(5000, 0.5 * np.eye(2), seed=s), 1).coef[0] - 0.5 * np.eye(2))) < 0.05
               for s in seeds)
    assert hits / len(seeds) >= 0.9