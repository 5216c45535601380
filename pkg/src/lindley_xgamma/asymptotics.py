"""Pseudo-true parameters and the large-sample law of the log-RML statistic.

Under a Lindley truth the xgamma fit converges to the maximizer of the
expected xgamma log-density (and symmetrically for an xgamma truth). The
per-observation mean and variance of ``d(X) = ln f_LD(X) - ln f_XG(X)``
evaluated at the true and pseudo-true parameters give the normal
approximation ``T ~ N(n * am, n * av)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .distributions import Family, Model, lindley, moments, xgamma
from .errors import NumericalError
from .numerics import DEFAULT_QUAD, QuadratureSpec, covariance, expand_bracket, expect, find_root, std_normal_cdf

__all__ = [
    "AsymptoticSummary",
    "xgamma_objective",
    "xgamma_objective_score",
    "lindley_objective",
    "lindley_objective_score",
    "pseudo_true_theta",
    "pseudo_true_lambda",
    "log_ratio_fn",
    "asymptotic_summary",
    "asymptotic_variance_expansion",
    "pcs_asymptotic",
]


@dataclass(frozen=True)
class AsymptoticSummary:
    """Per-observation asymptotic mean ``am`` and variance ``av`` of ``T``.

    ``pseudo_true_param`` is the xgamma ``theta`` closest to a Lindley truth,
    or the Lindley ``lam`` closest to an xgamma truth.
    """

    truth: Model
    pseudo_true_param: float
    am: float
    av: float

    @property
    def lindley_param(self) -> float:
        return self.truth.param if self.truth.family is Family.LINDLEY else self.pseudo_true_param

    @property
    def xgamma_param(self) -> float:
        return self.pseudo_true_param if self.truth.family is Family.LINDLEY else self.truth.param

    @property
    def pseudo_true_model(self) -> Model:
        if self.truth.family is Family.LINDLEY:
            return xgamma(self.pseudo_true_param)
        return lindley(self.pseudo_true_param)

    def pcs(self, n: int) -> float:
        """Normal-approximation probability that the sign rule picks the truth."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return std_normal_cdf(math.sqrt(n) * abs(self.am) / math.sqrt(self.av))


# -- Lindley truth -------------------------------------------------------------

def xgamma_objective(theta: float, lam: float, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Expected xgamma log-density under ``Lindley(lam)``."""
    mean, _ = moments(lindley(lam))
    e_log = expect(lindley(lam), lambda x: math.log1p(0.5 * theta * x * x), spec)
    return 2.0 * math.log(theta) - math.log1p(theta) + e_log - theta * mean


def xgamma_objective_score(theta: float, lam: float, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Derivative of :func:`xgamma_objective` in ``theta``."""
    mean, _ = moments(lindley(lam))
    e_ratio = expect(lindley(lam), lambda x: 0.5 * x * x / (1.0 + 0.5 * theta * x * x), spec)
    return 2.0 / theta - 1.0 / (1.0 + theta) + e_ratio - mean


@lru_cache(maxsize=1024)
def pseudo_true_theta(lam: float, spec: QuadratureSpec = DEFAULT_QUAD, tol: float = 1e-12) -> float:
    """xgamma parameter maximizing the expected xgamma log-density under ``Lindley(lam)``."""
    lam = lindley(lam).param
    score: Callable[[float], float] = lambda t: xgamma_objective_score(t, lam, spec)
    lo, hi = expand_bracket(score, max(1e-6, lam / 4.0), 8.0 * lam + 2.0)
    theta = find_root(score, (lo, hi), tol=tol)
    step = 1e-3 * theta
    curvature = (xgamma_objective(theta + step, lam, spec) - 2.0 * xgamma_objective(theta, lam, spec)
                 + xgamma_objective(theta - step, lam, spec)) / step ** 2
    if not curvature < 0.0:
        raise NumericalError(f"stationary point {theta:.6g} is not a maximum (curvature {curvature:.3g})",
                             estimate=theta)
    return theta


# -- xgamma truth --------------------------------------------------------------

def lindley_objective(lam: float, theta: float, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Expected Lindley log-density under ``Xgamma(theta)``."""
    mean, _ = moments(xgamma(theta))
    e_log = expect(xgamma(theta), math.log1p, spec)
    return 2.0 * math.log(lam) - math.log1p(lam) + e_log - lam * mean


def lindley_objective_score(lam: float, theta: float) -> float:
    mean, _ = moments(xgamma(theta))
    return 2.0 / lam - 1.0 / (1.0 + lam) - mean


def pseudo_true_lambda(theta: float) -> float:
    """Lindley parameter closest to ``Xgamma(theta)``.

    The score equation reduces to ``c lam^2 + (c - 1) lam - 2 = 0`` with
    ``c`` the xgamma mean, whose positive root is returned.
    """
    c, _ = moments(xgamma(theta))
    return (-(c - 1.0) + math.sqrt((c - 1.0) ** 2 + 8.0 * c)) / (2.0 * c)


# -- asymptotic mean and variance ----------------------------------------------

def log_ratio_fn(lam: float, theta: float) -> Callable[[float], float]:
    """``x -> ln f_LD(x; lam) - ln f_XG(x; theta)`` as a fast scalar function."""
    const = 2.0 * math.log(lam / theta) + math.log((1.0 + theta) / (1.0 + lam))
    slope = theta - lam

    def d(x: float) -> float:
        return const + slope * x + math.log1p(x) - math.log1p(0.5 * theta * x * x)

    return d


def _am_closed(lam: float, theta: float, truth: Model, spec: QuadratureSpec) -> float:
    mean, _ = moments(truth)
    return (2.0 * math.log(lam / theta) + math.log((1.0 + theta) / (1.0 + lam))
            + (theta - lam) * mean
            + expect(truth, math.log1p, spec)
            - expect(truth, lambda x: math.log1p(0.5 * theta * x * x), spec))


@lru_cache(maxsize=1024)
def asymptotic_summary(truth: Model, spec: QuadratureSpec = DEFAULT_QUAD) -> AsymptoticSummary:
    """Pseudo-true parameter, ``am`` and ``av`` for the given truth.

    ``am`` comes from the closed expression in the model moments and two
    log-moments; ``av`` is ``E[d^2] - E[d]^2`` by direct quadrature.
    """
    if truth.family is Family.LINDLEY:
        lam = truth.param
        theta = pseudo_true = pseudo_true_theta(lam, spec)
    else:
        theta = truth.param
        lam = pseudo_true = pseudo_true_lambda(theta)
    am = _am_closed(lam, theta, truth, spec)
    d = log_ratio_fn(lam, theta)
    e1 = expect(truth, d, spec)
    e2 = expect(truth, lambda x: d(x) ** 2, spec)
    av = e2 - e1 * e1
    if not av > 0.0:
        raise NumericalError(f"non-positive asymptotic variance {av:.3g} for {truth}", estimate=av)
    return AsymptoticSummary(truth=truth, pseudo_true_param=pseudo_true, am=am, av=av)


def asymptotic_variance_expansion(summary: AsymptoticSummary, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """``av`` rebuilt term by term from variances and covariances of
    ``X``, ``ln(1+X)`` and ``ln(1 + theta X^2 / 2)`` (independent check)."""
    truth = summary.truth
    lam, theta = summary.lindley_param, summary.xgamma_param
    slope = theta - lam
    _, var_x = moments(truth)
    ident = lambda x: x  # noqa: E731
    a = math.log1p
    b = lambda x: math.log1p(0.5 * theta * x * x)  # noqa: E731
    return (slope ** 2 * var_x
            + covariance(truth, a, a, spec)
            + covariance(truth, b, b, spec)
            + 2.0 * slope * (covariance(truth, ident, a, spec) - covariance(truth, ident, b, spec))
            - 2.0 * covariance(truth, a, b, spec))


def pcs_asymptotic(truth: Model, n: int, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Normal-approximation probability of correct selection at sample size ``n``."""
    return asymptotic_summary(truth, spec).pcs(n)
