"""Maximum-likelihood fitting of the Lindley and xgamma families."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .distributions import Model, Sample, lindley, log_density, xgamma
from .errors import NumericalError
from .numerics import expand_bracket, find_root

__all__ = [
    "FitResult",
    "fit_lindley",
    "fit_xgamma",
    "fit",
    "log_likelihood",
    "lindley_mle",
    "xgamma_moment_guess",
    "xgamma_score",
    "lindley_mle_batch",
    "xgamma_mle_batch",
]


@dataclass(frozen=True)
class FitResult:
    """Fitted model with its maximized log-likelihood.

    ``residual`` is the absolute value of the score equation at the fitted
    parameter; ``iterations`` counts score evaluations (zero for closed forms).
    """

    model: Model
    log_likelihood: float
    iterations: int = 0
    residual: float = 0.0

    @property
    def param(self) -> float:
        return self.model.param


def _as_sample(sample: Sample | NDArray[np.float64] | list[float]) -> Sample:
    return sample if isinstance(sample, Sample) else Sample(np.asarray(sample, dtype=float))


def log_likelihood(sample: Sample, model: Model) -> float:
    sample = _as_sample(sample)
    return float(np.sum(log_density(model, sample.values)))


def lindley_mle(mean: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """Closed-form Lindley MLE as a function of the sample mean (vectorized)."""
    m = np.asarray(mean, dtype=float)
    lam = (-(m - 1.0) + np.sqrt((m - 1.0) ** 2 + 8.0 * m)) / (2.0 * m)
    return float(lam) if lam.ndim == 0 else lam


def xgamma_moment_guess(mean: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """Positive root of ``mean * t**2 + (mean - 1) * t - 3 = 0`` (xgamma mean matched to ``mean``)."""
    return (-(mean - 1.0) + np.sqrt((mean - 1.0) ** 2 + 12.0 * mean)) / (2.0 * mean)


def xgamma_score(theta: float, values: NDArray[np.float64], mean: float | None = None) -> float:
    """Per-observation xgamma score; strictly decreasing in ``theta``."""
    if mean is None:
        mean = float(np.mean(values))
    x2 = values * values
    return (2.0 + theta) / (theta * (1.0 + theta)) + float(np.mean(x2 / (2.0 + theta * x2))) - mean


def fit_lindley(sample: Sample) -> FitResult:
    sample = _as_sample(sample)
    lam = lindley_mle(sample.mean)
    model = lindley(lam)
    residual = abs((2.0 + lam) / (lam * (1.0 + lam)) - sample.mean)
    return FitResult(model, log_likelihood(sample, model), iterations=0, residual=residual)


def fit_xgamma(sample: Sample, tol: float = 1e-10) -> FitResult:
    """Solve the xgamma score equation by bracketed root finding.

    The bracket starts at ``[t0/10, 10 t0]`` around the method-of-moments
    value ``t0`` and is widened geometrically if needed.
    """
    sample = _as_sample(sample)
    values, mean = sample.values, sample.mean
    calls = 0

    def score(t: float) -> float:
        nonlocal calls
        calls += 1
        return xgamma_score(t, values, mean)

    t0 = xgamma_moment_guess(mean)
    try:
        lo, hi = expand_bracket(score, t0 / 10.0, 10.0 * t0)
    except NumericalError:
        lo, hi = expand_bracket(score, 1e-8, 1.0)
    theta = find_root(score, (lo, hi), tol=tol)
    model = xgamma(theta)
    return FitResult(model, log_likelihood(sample, model), iterations=calls,
                     residual=abs(xgamma_score(theta, values, mean)))


def fit(sample: Sample) -> tuple[FitResult, FitResult]:
    """Both fits, Lindley first."""
    return fit_lindley(sample), fit_xgamma(sample)


# -- batched versions used by the simulation harness --------------------------

def lindley_mle_batch(x: NDArray[np.float64]) -> NDArray[np.float64]:
    """Lindley MLE for each row of ``x``."""
    return np.asarray(lindley_mle(x.mean(axis=1)))


def xgamma_mle_batch(x: NDArray[np.float64], rtol: float = 1e-13, max_iter: int = 200) -> NDArray[np.float64]:
    """xgamma MLE for each row of ``x`` by safeguarded Newton iteration.

    Every row keeps a sign-change bracket; a Newton step leaving it is
    replaced by a geometric-mean bisection. Rows that fail to converge come
    back as ``nan``.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    x2 = x * x
    mean = x.mean(axis=1)

    def score_and_slope(t: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        denom = 2.0 + t[:, None] * x2
        ratio = x2 / denom
        s = (2.0 + t) / (t * (1.0 + t)) + ratio.mean(axis=1) - mean
        ds = -(t * t + 4.0 * t + 2.0) / (t * (1.0 + t)) ** 2 - (ratio * ratio).mean(axis=1)
        return s, ds

    t0 = xgamma_moment_guess(mean)
    lo, hi = t0 / 10.0, t0 * 10.0
    s_lo, _ = score_and_slope(lo)
    s_hi, _ = score_and_slope(hi)
    for _ in range(60):
        bad_lo, bad_hi = s_lo <= 0.0, s_hi >= 0.0
        if not (bad_lo.any() or bad_hi.any()):
            break
        lo = np.where(bad_lo, lo / 4.0, lo)
        hi = np.where(bad_hi, hi * 4.0, hi)
        s_lo, _ = score_and_slope(lo)
        s_hi, _ = score_and_slope(hi)

    t = np.clip(t0, lo, hi)
    done = np.zeros(t.shape, dtype=bool)
    for _ in range(max_iter):
        s, ds = score_and_slope(t)
        # score is decreasing: s > 0 means the root lies above t
        lo = np.where(s > 0.0, t, lo)
        hi = np.where(s < 0.0, t, hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = t - s / ds
        outside = ~np.isfinite(step) | (step <= lo) | (step >= hi)
        new = np.where(outside, np.sqrt(lo * hi), step)
        newly_done = (np.abs(new - t) <= rtol * t) | (s == 0.0)
        t = np.where(done, t, new)
        done |= newly_done
        if done.all():
            break
    return np.where(done, t, np.nan)
