"""Goodness of fit of a fitted model: one-sample K-S test and binned chi-square."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distributions import Model, Sample, cdf
from .numerics import chi_square_sf, kolmogorov_sf

__all__ = ["Bin", "GofReport", "ks_statistic", "ks_test", "chi_square_test", "gof_report"]


@dataclass(frozen=True)
class Bin:
    """Interval ``(lower, upper]``; the last bin has ``upper = inf``."""

    lower: float
    upper: float
    observed: int
    expected: float


@dataclass(frozen=True)
class GofReport:
    ks_statistic: float
    ks_p_value: float
    chi_square: float
    chi_df: int
    chi_p_value: float
    bins: tuple[Bin, ...]


def _values(sample: Sample | Sequence[float]) -> np.ndarray:
    return sample.values if isinstance(sample, Sample) else Sample(np.asarray(sample, dtype=float)).values


def ks_statistic(sample: Sample, model: Model) -> float:
    x = np.sort(_values(sample))
    n = x.size
    f = np.asarray(cdf(model, x))
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))


def ks_test(sample: Sample, model: Model) -> tuple[float, float]:
    """Kolmogorov-Smirnov statistic and p-value (exact below n = 100)."""
    d = ks_statistic(sample, model)
    return d, kolmogorov_sf(d, _values(sample).size)


def chi_square_test(sample: Sample, model: Model, edges: Sequence[float],
                    fitted_params: int = 1) -> tuple[float, int, float, tuple[Bin, ...]]:
    """Pearson chi-square over bins ``(0, e1], (e1, e2], ..., (ek, inf)``.

    Returns ``(statistic, df, p_value, bins)`` with
    ``df = #bins - 1 - fitted_params``.
    """
    x = _values(sample)
    n = x.size
    inner = np.asarray(edges, dtype=float)
    if inner.size and (np.any(np.diff(inner) <= 0) or inner[0] <= 0):
        raise ValueError("bin edges must be positive and strictly increasing")
    full = np.concatenate([[0.0], inner, [np.inf]])
    df = full.size - 2 - fitted_params
    if df < 1:
        raise ValueError(f"{full.size - 1} bins leave no degrees of freedom with {fitted_params} fitted parameters")
    probs = np.diff(np.asarray(cdf(model, full)))
    expected = n * probs
    if np.any(expected <= 0.0):
        empty = [f"({a:g}, {b:g}]" for a, b, e in zip(full[:-1], full[1:], expected) if e <= 0.0]
        raise ValueError(f"zero expected count in bin(s) {', '.join(empty)}; merge adjacent bins")
    # right-closed intervals: a value equal to an edge belongs to the lower bin
    observed = np.bincount(np.searchsorted(inner, x, side="left"), minlength=full.size - 1)
    stat = float(np.sum((observed - expected) ** 2 / expected))
    bins = tuple(Bin(float(a), float(b), int(o), float(e))
                 for a, b, o, e in zip(full[:-1], full[1:], observed, expected))
    return stat, df, chi_square_sf(stat, df), bins


def gof_report(sample: Sample, model: Model, edges: Sequence[float], fitted_params: int = 1) -> GofReport:
    d, p = ks_test(sample, model)
    stat, df, chi_p, bins = chi_square_test(sample, model, edges, fitted_params)
    return GofReport(ks_statistic=d, ks_p_value=p, chi_square=stat, chi_df=df, chi_p_value=chi_p, bins=bins)
