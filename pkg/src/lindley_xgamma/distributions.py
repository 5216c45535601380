"""Lindley and xgamma lifetime families.

Both families are two-component mixtures sharing one rate parameter::

    Lindley(lam)  = Exp(lam)   w.p. lam/(1+lam),   Gamma(2, lam) otherwise
    Xgamma(theta) = Exp(theta) w.p. theta/(1+theta), Gamma(3, theta) otherwise

which gives closed forms for the density, the CDF and the first two moments,
and an exact rejection-free sampler.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DomainError

__all__ = [
    "Family",
    "Model",
    "Sample",
    "lindley",
    "xgamma",
    "log_density",
    "density",
    "cdf",
    "moments",
    "sample",
    "mixture_weight",
    "draw",
]


class Family(str, enum.Enum):
    LINDLEY = "lindley"
    XGAMMA = "xgamma"

    @property
    def other(self) -> Family:
        return Family.XGAMMA if self is Family.LINDLEY else Family.LINDLEY


@dataclass(frozen=True)
class Model:
    """A member of one of the two families.

    ``param`` is the Lindley rate ``lam`` or the xgamma rate ``theta``.
    """

    family: Family
    param: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        param = float(self.param)
        if not np.isfinite(param) or param <= 0.0:
            raise DomainError(f"{self.family.value} parameter must be positive, got {self.param!r}")
        object.__setattr__(self, "param", param)

    def __str__(self) -> str:
        name = "Lindley" if self.family is Family.LINDLEY else "Xgamma"
        return f"{name}({self.param:g})"


def lindley(lam: float) -> Model:
    return Model(Family.LINDLEY, lam)


def xgamma(theta: float) -> Model:
    return Model(Family.XGAMMA, theta)


@dataclass(frozen=True, eq=False)
class Sample:
    """Positive observations with cached size and mean."""

    values: NDArray[np.float64]
    n: int = field(init=False)
    mean: float = field(init=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float).ravel()
        if values.size == 0:
            raise ValueError("sample must contain at least one observation")
        if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
            raise DomainError("sample values must be finite and strictly positive")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "n", int(values.size))
        object.__setattr__(self, "mean", float(np.mean(values)))

    def __len__(self) -> int:
        return self.n


def _check_x(x: ArrayLike, *, strict: bool) -> NDArray[np.float64]:
    arr = np.asarray(x, dtype=float)
    bad = (arr <= 0.0) if strict else (arr < 0.0)
    if np.any(bad) or np.any(np.isnan(arr)):
        bound = "> 0" if strict else ">= 0"
        raise DomainError(f"x must be {bound}")
    return arr


def _scalar_or_array(out: NDArray[np.float64]) -> float | NDArray[np.float64]:
    return float(out) if out.ndim == 0 else out


def log_density(model: Model, x: ArrayLike) -> float | NDArray[np.float64]:
    """Log of the density at ``x > 0`` (scalar or array)."""
    x = _check_x(x, strict=True)
    p = model.param
    norm = 2.0 * np.log(p) - np.log1p(p)
    if model.family is Family.LINDLEY:
        out = norm + np.log1p(x) - p * x
    else:
        out = norm + np.log1p(0.5 * p * x * x) - p * x
    return _scalar_or_array(out)


def density(model: Model, x: ArrayLike) -> float | NDArray[np.float64]:
    """Density at ``x > 0``; use :func:`log_density` in likelihood sums."""
    return _scalar_or_array(np.exp(np.asarray(log_density(model, x))))


def cdf(model: Model, x: ArrayLike) -> float | NDArray[np.float64]:
    """Closed-form distribution function for ``x >= 0`` (``inf`` allowed)."""
    x = _check_x(x, strict=False)
    p = model.param
    with np.errstate(invalid="ignore", over="ignore"):
        if model.family is Family.LINDLEY:
            poly = 1.0 + p + p * x
        else:
            poly = 1.0 + p + p * x + 0.5 * (p * x) ** 2
        surv = poly / (1.0 + p) * np.exp(-p * x)
    surv = np.where(np.isinf(x), 0.0, surv)
    return _scalar_or_array(np.clip(1.0 - surv, 0.0, 1.0))


def moments(model: Model) -> tuple[float, float]:
    """Return ``(mean, variance)``."""
    p = model.param
    if model.family is Family.LINDLEY:
        mean = (2.0 + p) / (p * (1.0 + p))
        var = (p * p + 4.0 * p + 2.0) / (p * p * (1.0 + p) ** 2)
    else:
        mean = (3.0 + p) / (p * (1.0 + p))
        var = (p * p + 8.0 * p + 3.0) / (p * p * (1.0 + p) ** 2)
    return mean, var


def mixture_weight(model: Model) -> tuple[float, int]:
    """Weight of the exponential component and shape of the gamma component."""
    p = model.param
    shape = 2 if model.family is Family.LINDLEY else 3
    return p / (1.0 + p), shape


def _as_generator(seed: int | np.random.Generator | np.random.SeedSequence | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def draw(model: Model, size: int | tuple[int, ...], rng: np.random.Generator) -> NDArray[np.float64]:
    """Raw mixture draws of arbitrary shape from an existing generator."""
    weight, shape = mixture_weight(model)
    size = (size,) if isinstance(size, int) else tuple(size)
    pick_exp = rng.random(size) < weight
    # Erlang(k) as a sum of k unit exponentials, exponential component uses the first column.
    e = rng.standard_exponential(size + (shape,))
    gamma_part = e.sum(axis=-1)
    return np.where(pick_exp, e[..., 0], gamma_part) / model.param


def sample(model: Model, n: int, seed: int | np.random.Generator | np.random.SeedSequence | None = None) -> Sample:
    """Draw ``n`` i.i.d. observations.

    The same ``(model, n, seed)`` always reproduces the same values when
    ``seed`` is an integer or a :class:`numpy.random.SeedSequence`.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    values = draw(model, int(n), _as_generator(seed))
    # Exp draws can underflow to exactly zero only with probability ~1e-300; keep support strict.
    values = np.maximum(values, np.finfo(float).tiny)
    return Sample(values)
