import math

import numpy as np
import pytest
from scipy import optimize

from lindley_xgamma.asymptotics import (
    AsymptoticSummary, asymptotic_summary, asymptotic_variance_expansion, lindley_objective,
    lindley_objective_score, log_ratio_fn, pcs_asymptotic, pseudo_true_lambda, pseudo_true_theta,
    xgamma_objective, xgamma_objective_score,
)
from lindley_xgamma.distributions import lindley, sample, xgamma
from lindley_xgamma.numerics import expect
from reference_values import TABLE1, TABLE2, TABLE5, TABLE6

SPOT_LAMBDAS = (0.05, 0.1, 0.3, 0.7, 1.0, 2.0, 3.5, 5.0)
SPOT_THETAS = (0.05, 0.1, 0.3, 0.7, 1.0, 2.0, 3.5, 5.0)


def _g_by_laguerre(thetas, lam, nodes=100):
    """Expected xgamma log-density under Lindley(lam), by Gauss-Laguerre on u = lam x."""
    u, w = np.polynomial.laguerre.laggauss(nodes)
    x = u / lam
    weight = w * lam / (1 + lam) * (1 + x)  # f(x) dx = weight * e^{-u}
    e_log = np.log1p(0.5 * np.outer(thetas, x * x)) @ weight
    mean = (2 + lam) / (lam * (1 + lam))
    return 2 * np.log(thetas) - np.log1p(thetas) + e_log - thetas * mean


class TestPseudoTrueTheta:
    @pytest.mark.parametrize("lam, expected", [(0.45, 0.59983), (0.78, 1.00154)])
    def test_published(self, lam, expected):
        assert pseudo_true_theta(lam) == pytest.approx(expected, abs=5e-4)

    def test_grid_maximization_at_one(self):
        grid = np.arange(0.5, 2.5 + 5e-5, 1e-4)
        best = grid[np.argmax(_g_by_laguerre(grid, 1.0))]
        assert abs(pseudo_true_theta(1.0) - best) <= 1e-4

    def test_objective_matches_laguerre(self):
        for t in (0.4, 1.2, 3.0):
            assert xgamma_objective(t, 1.0) == pytest.approx(_g_by_laguerre(np.array([t]), 1.0)[0], abs=1e-9)

    @pytest.mark.parametrize("lam", SPOT_LAMBDAS)
    def test_stationarity(self, lam):
        theta = pseudo_true_theta(lam)
        assert abs(xgamma_objective_score(theta, lam)) <= 1e-8
        g0 = xgamma_objective(theta, lam)
        assert g0 >= xgamma_objective(theta + 0.01, lam)
        assert g0 >= xgamma_objective(max(theta - 0.01, theta / 2), lam)


class TestPseudoTrueLambda:
    @pytest.mark.parametrize("theta, expected", [(0.85, 0.65520), (2.05, 1.69716)])
    def test_published(self, theta, expected):
        assert pseudo_true_lambda(theta) == pytest.approx(expected, abs=1e-5)

    def test_closed_form_at_one(self):
        exact = (-1 + math.sqrt(17)) / 4
        assert pseudo_true_lambda(1.0) == pytest.approx(exact, abs=1e-12)
        root = optimize.brentq(lambda l: 2 / l - 1 / (1 + l) - 2.0, 0.1, 5.0, xtol=1e-14)
        assert pseudo_true_lambda(1.0) == pytest.approx(root, abs=1e-12)

    @pytest.mark.parametrize("theta", SPOT_THETAS)
    def test_stationarity(self, theta):
        lam = pseudo_true_lambda(theta)
        assert abs(lindley_objective_score(lam, theta)) <= 1e-8
        h0 = lindley_objective(lam, theta)
        assert h0 >= lindley_objective(lam + 0.01, theta)
        assert h0 >= lindley_objective(max(lam - 0.01, lam / 2), theta)


class TestSummary:
    @pytest.mark.parametrize("truth, am, av", [
        (lindley(0.45), 0.00794, 0.01582),
        (xgamma(0.85), -0.00718, 0.01480),
        (lindley(1.38), 0.00559, 0.01087),
    ])
    def test_published(self, truth, am, av):
        s = asymptotic_summary(truth)
        assert s.am == pytest.approx(am, abs=5e-4)
        assert s.av == pytest.approx(av, abs=5e-4)

    def test_am_equals_expected_log_ratio(self):
        s = asymptotic_summary(lindley(0.9))
        d = log_ratio_fn(s.lindley_param, s.xgamma_param)
        assert s.am == pytest.approx(expect(s.truth, d), abs=1e-10)

    @pytest.mark.parametrize("truth", [lindley(p) for p in SPOT_LAMBDAS] + [xgamma(p) for p in SPOT_THETAS])
    def test_kl_sign(self, truth):
        s = asymptotic_summary(truth)
        assert s.av > 0
        assert (s.am > 0) if truth.family.value == "lindley" else (s.am < 0)

    @pytest.mark.parametrize("truth", [lindley(0.45), xgamma(1.26), lindley(2.5), xgamma(0.3)])
    def test_variance_expansion(self, truth):
        s = asymptotic_summary(truth)
        assert asymptotic_variance_expansion(s) == pytest.approx(s.av, abs=1e-9)

    @pytest.mark.parametrize("truth", [lindley(0.45), lindley(1.38), xgamma(1.26)])
    def test_variance_against_simulation(self, truth):
        s = asymptotic_summary(truth)
        n = 10 ** 7
        x = sample(truth, n, seed=31337).values
        lam, theta = s.lindley_param, s.xgamma_param
        d = (2 * np.log(lam / theta) + np.log((1 + theta) / (1 + lam)) + (theta - lam) * x
             + np.log1p(x) - np.log1p(0.5 * theta * x * x))
        c = d - d.mean()
        var = np.mean(c * c)
        se = math.sqrt((np.mean(c ** 4) - var ** 2) / n)
        assert abs(var - s.av) <= 3 * se


class TestPcs:
    def test_published(self):
        assert pcs_asymptotic(lindley(0.45), 400) == pytest.approx(TABLE5[0.45][1][5], abs=1e-3)
        assert pcs_asymptotic(xgamma(0.85), 20) == pytest.approx(TABLE6[0.85][1][0], abs=1e-3)

    def test_zero_mean(self):
        assert AsymptoticSummary(lindley(1.0), 1.2, 0.0, 0.01).pcs(50) == 0.5

    @pytest.mark.parametrize("truth", [lindley(0.78), xgamma(2.05)])
    def test_increasing_to_one(self, truth):
        values = [pcs_asymptotic(truth, n) for n in (1, 2, 5, 20, 100, 1000, 10_000)]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert pcs_asymptotic(truth, 10 ** 6) > 1 - 1e-12

    def test_rejects_zero_n(self):
        with pytest.raises(ValueError):
            pcs_asymptotic(lindley(1.0), 0)

    def test_cached_summary_is_shared(self):
        assert asymptotic_summary(lindley(0.45)) is asymptotic_summary(lindley(0.45))


def test_table_grids_cover_published_rows():
    assert len(TABLE1) == 12 and len(TABLE2) == 12
