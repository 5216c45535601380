"""Numerical building blocks: half-line quadrature, expectations, root
finding and the tail probabilities used by the tests of fit.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, optimize, special

from .distributions import Family, Model
from .errors import BracketError, DomainError, NumericalError

__all__ = [
    "QuadratureSpec",
    "DEFAULT_QUAD",
    "integrate_halfline",
    "expect",
    "covariance",
    "find_root",
    "expand_bracket",
    "std_normal_cdf",
    "std_normal_quantile",
    "chi_square_sf",
    "kolmogorov_sf",
    "kolmogorov_sf_exact",
    "kolmogorov_sf_asymptotic",
    "tail_probability",
    "EXACT_KOLMOGOROV_MAX_N",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Absolute tolerance and subdivision budget for :func:`integrate_halfline`."""

    abs_tol: float = 1e-10
    max_subdivisions: int = 200

    def __post_init__(self) -> None:
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUAD = QuadratureSpec()


def integrate_halfline(f: Callable[[float], float], spec: QuadratureSpec = DEFAULT_QUAD,
                       *, with_error: bool = False) -> float | tuple[float, float]:
    """Integrate ``f`` over ``(0, inf)``.

    The half-line is folded onto ``(0, 1]`` by ``x = (1 - t) / t`` and the
    transformed integrand is subdivided adaptively with 15-point Gauss-Kronrod
    rules (QUADPACK ``qagi``). Raises :class:`NumericalError` carrying the best
    estimate when the subdivision budget is exhausted before ``spec.abs_tol``.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(
            f, 0.0, np.inf, epsabs=spec.abs_tol, epsrel=0.0,
            limit=spec.max_subdivisions, full_output=1,
        )
    value, abserr = float(out[0]), float(out[1])
    # A fourth element is QUADPACK's warning text (budget exhausted, round-off, ...).
    # Round-off flags are tolerated when the error estimate still meets the target.
    if len(out) > 3 and not abserr <= spec.abs_tol:
        raise NumericalError(f"half-line quadrature did not converge: {out[3]}",
                             estimate=value, error_bound=abserr)
    if not np.isfinite(value):
        raise NumericalError("half-line quadrature produced a non-finite value",
                             estimate=value, error_bound=abserr)
    return (value, abserr) if with_error else value


def _pdf_scalar(model: Model) -> Callable[[float], float]:
    p = model.param
    c = p * p / (1.0 + p)
    if model.family is Family.LINDLEY:
        return lambda x: c * (1.0 + x) * math.exp(-p * x) if p * x < 745.0 else 0.0
    return lambda x: c * (1.0 + 0.5 * p * x * x) * math.exp(-p * x) if p * x < 745.0 else 0.0


def expect(model: Model, h: Callable[[float], float], spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """``E[h(X)]`` for ``X`` distributed as ``model``."""
    pdf = _pdf_scalar(model)

    def integrand(x: float) -> float:
        w = pdf(x)
        return 0.0 if w == 0.0 else h(x) * w

    return integrate_halfline(integrand, spec)


def covariance(model: Model, g: Callable[[float], float], h: Callable[[float], float],
               spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """``Cov[g(X), h(X)] = E[gh] - E[g] E[h]``."""
    return (expect(model, lambda x: g(x) * h(x), spec)
            - expect(model, g, spec) * expect(model, h, spec))


def expand_bracket(f: Callable[[float], float], lo: float, hi: float, *, factor: float = 2.0,
                   max_steps: int = 80, positive: bool = True) -> tuple[float, float]:
    """Widen ``[lo, hi]`` geometrically until ``f`` changes sign.

    With ``positive=True`` the lower end is shrunk towards zero (divided by
    ``factor``) rather than pushed negative, for parameters living on ``(0, inf)``.
    """
    flo, fhi = f(lo), f(hi)
    for _ in range(max_steps):
        if np.sign(flo) != np.sign(fhi) or flo == 0.0 or fhi == 0.0:
            return lo, hi
        if abs(flo) < abs(fhi):
            lo = lo / factor if positive else lo - (hi - lo) * (factor - 1.0)
            flo = f(lo)
        else:
            hi = hi * factor if positive else hi + (hi - lo) * (factor - 1.0)
            fhi = f(hi)
    if np.sign(flo) != np.sign(fhi):
        return lo, hi
    raise BracketError(f"no sign change found after expanding to [{lo:.3g}, {hi:.3g}]")


def find_root(f: Callable[[float], float], bracket: tuple[float, float], tol: float = 1e-10) -> float:
    """Root of ``f`` inside ``bracket`` (Brent: bisection safeguarded secant/IQI steps).

    Raises :class:`BracketError` when ``f`` has the same sign at both ends.
    """
    lo, hi = map(float, bracket)
    if not lo < hi:
        raise ValueError("bracket must satisfy lo < hi")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if not np.isfinite(flo) or not np.isfinite(fhi) or np.sign(flo) == np.sign(fhi):
        raise BracketError(f"f({lo:.6g})={flo:.3g} and f({hi:.6g})={fhi:.3g} do not bracket a root")
    # xtol well below tol so that |f(root)| <= tol holds for moderately steep f.
    root, res = optimize.brentq(f, lo, hi, xtol=min(tol, 1e-12) * 1e-2, rtol=4 * np.finfo(float).eps,
                                maxiter=500, full_output=True, disp=False)
    if not res.converged:
        raise NumericalError("root finder did not converge", estimate=root)
    return float(root)


# -- tail probabilities ------------------------------------------------------

EXACT_KOLMOGOROV_MAX_N = 99


def std_normal_cdf(x: float) -> float:
    return float(special.ndtr(x))


def std_normal_quantile(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise DomainError(f"quantile level must lie in (0, 1), got {p!r}")
    return float(special.ndtri(p))


def chi_square_sf(x: float, df: int) -> float:
    """Upper tail of the chi-square law via the regularized incomplete gamma function."""
    if df < 1:
        raise DomainError(f"df must be >= 1, got {df!r}")
    if x < 0:
        raise DomainError("chi-square statistic must be non-negative")
    return float(special.gammaincc(0.5 * df, 0.5 * x))


def kolmogorov_sf_asymptotic(t: float) -> float:
    """Limit law ``P(sqrt(n) D_n > t)``.

    Uses ``2 sum (-1)^(k-1) exp(-2 k^2 t^2)`` for ``t >= 1`` and the Jacobi
    theta dual ``1 - sqrt(2 pi)/t sum exp(-(2k-1)^2 pi^2 / (8 t^2))`` below.
    """
    if t < 0:
        raise DomainError("t must be non-negative")
    if t == 0.0:
        return 1.0
    if t >= 1.0:
        total = 0.0
        for k in range(1, 101):
            term = math.exp(-2.0 * k * k * t * t)
            total += term if k % 2 else -term
            if term < 1e-18:
                break
        return min(1.0, max(0.0, 2.0 * total))
    total = 0.0
    for k in range(1, 101):
        term = math.exp(-((2 * k - 1) ** 2) * math.pi ** 2 / (8.0 * t * t))
        total += term
        if term < 1e-18:
            break
    return min(1.0, max(0.0, 1.0 - math.sqrt(2.0 * math.pi) / t * total))


def _matrix_power_scaled(h: np.ndarray, n: int) -> tuple[np.ndarray, int]:
    """``h**n`` as ``(M, e)`` with ``h**n = M * 2**e``; keeps entries in range."""
    result = np.eye(h.shape[0])
    res_exp = 0
    base = h.copy()
    base_exp = 0
    while n:
        if n & 1:
            result = result @ base
            res_exp += base_exp
            _, e = math.frexp(float(np.max(np.abs(result))) or 1.0)
            result = np.ldexp(result, -e)
            res_exp += e
        n >>= 1
        if n:
            base = base @ base
            base_exp *= 2
            _, e = math.frexp(float(np.max(np.abs(base))) or 1.0)
            base = np.ldexp(base, -e)
            base_exp += e
    return result, res_exp


def kolmogorov_sf_exact(d: float, n: int) -> float:
    """Exact ``P(D_n > d)`` for the two-sided one-sample statistic.

    Durbin's matrix formulation evaluated as in Marsaglia, Tsang and Wang
    (2003), with binary exponent tracking instead of decimal rescaling.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if d <= 0.0:
        return 1.0
    if d >= 1.0:
        return 0.0
    nd = n * d
    if nd <= 0.5:
        return 1.0
    k = int(nd) + 1
    m = 2 * k - 1
    h = k - nd
    i = np.arange(m)
    diff = i[:, None] - i[None, :] + 1
    mat = np.where(diff >= 0, 1.0, 0.0)
    powers = h ** np.arange(1, m + 1)
    mat[:, 0] -= powers
    mat[m - 1, :] -= powers[::-1]
    if 2 * h - 1 > 0:
        mat[m - 1, 0] += (2 * h - 1) ** m
    fact = np.where(diff > 0, special.gamma(np.maximum(diff, 0) + 1.0), 1.0)
    mat = mat / fact
    q, e = _matrix_power_scaled(mat, n)
    val = q[k - 1, k - 1]
    if val <= 0.0:
        cdf = 0.0
    else:
        log_cdf = math.log(val) + e * math.log(2.0) + special.gammaln(n + 1) - n * math.log(n)
        cdf = math.exp(log_cdf)
    return min(1.0, max(0.0, 1.0 - cdf))


def kolmogorov_sf(d: float, n: int | None = None) -> float:
    """P-value of a one-sample Kolmogorov-Smirnov statistic ``d``.

    Exact for ``n < 100``; the limit law evaluated at ``sqrt(n) d`` otherwise.
    With ``n=None``, ``d`` is taken to be the already-scaled ``sqrt(n) D``.
    """
    if n is None:
        return kolmogorov_sf_asymptotic(d)
    if n < 1:
        raise DomainError("n must be >= 1")
    if d < 0:
        raise DomainError("d must be non-negative")
    if n <= EXACT_KOLMOGOROV_MAX_N:
        return kolmogorov_sf_exact(d, n)
    return kolmogorov_sf_asymptotic(math.sqrt(n) * d)


def tail_probability(kind: str, arg: float, param: int | None = None) -> float:
    """Dispatch by name: ``std_normal_cdf``, ``std_normal_quantile``,
    ``chi_square_sf`` (``param`` = df) or ``kolmogorov_sf`` (``param`` = n)."""
    if kind == "std_normal_cdf":
        return std_normal_cdf(arg)
    if kind == "std_normal_quantile":
        return std_normal_quantile(arg)
    if kind == "chi_square_sf":
        if param is None:
            raise ValueError("chi_square_sf needs df")
        return chi_square_sf(arg, param)
    if kind == "kolmogorov_sf":
        return kolmogorov_sf(arg, param)
    raise ValueError(f"unknown tail probability kind {kind!r}")
