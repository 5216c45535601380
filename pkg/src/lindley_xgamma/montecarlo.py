"""Monte Carlo estimate of the probability of correct selection.

Replication ``r`` of a cell draws from ``SeedSequence(seed, spawn_key=(r,))``,
so a cell's result depends only on ``(truth, n, reps, seed)`` and never on
how replications are split across workers.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .asymptotics import pcs_asymptotic
from .discrimination import log_rml_batch
from .distributions import Family, Model, draw
from .errors import NumericalError

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_REPS",
    "DEFAULT_NS",
    "PcsEstimate",
    "PcsTable",
    "replication_rng",
    "simulate_statistics",
    "simulate_pcs",
    "pcs_table",
]

log = logging.getLogger(__name__)

DEFAULT_SEED = 20190101
DEFAULT_REPS = 25_000
DEFAULT_NS: tuple[int, ...] = (20, 40, 60, 80, 100, 400)
MAX_FAILURE_RATE = 1e-3
_CHUNK = 1_000


@dataclass(frozen=True)
class PcsEstimate:
    truth: Model
    n: int
    reps: int
    seed: int
    pcs_mc: float
    std_error: float
    pcs_asymptotic: float
    failures: int = 0


def replication_rng(seed: int, rep: int) -> np.random.Generator:
    """Independent generator for replication ``rep`` of a run seeded with ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(rep,))))


def _chunk_statistics(truth: Model, n: int, seed: int, start: int, stop: int) -> np.ndarray:
    x = np.empty((stop - start, n))
    for i, r in enumerate(range(start, stop)):
        x[i] = draw(truth, n, replication_rng(seed, r))
    return log_rml_batch(x)


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        return min(8, os.cpu_count() or 1)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    return workers


def simulate_statistics(truth: Model, n: int, reps: int, seed: int = DEFAULT_SEED,
                        workers: int | None = None) -> np.ndarray:
    """Log-RML statistic of each replication, in replication order (``nan`` on fit failure)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    bounds = [(s, min(s + _CHUNK, reps)) for s in range(0, reps, _CHUNK)]
    workers = _resolve_workers(workers)
    if workers == 1 or len(bounds) == 1:
        parts = [_chunk_statistics(truth, n, seed, a, b) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ab: _chunk_statistics(truth, n, seed, *ab), bounds))
    return np.concatenate(parts)


def simulate_pcs(truth: Model, n: int, reps: int = DEFAULT_REPS, seed: int = DEFAULT_SEED,
                 workers: int | None = None) -> PcsEstimate:
    """Fraction of replications in which the sign rule picks the true family.

    A replication whose xgamma fit fails counts as an incorrect selection;
    more than 0.1% of such failures aborts the run.
    """
    t = simulate_statistics(truth, n, reps, seed, workers)
    failed = np.isnan(t)
    n_failed = int(failed.sum())
    if n_failed:
        log.warning("%d of %d replications failed to fit (%s, n=%d)", n_failed, reps, truth, n)
        if n_failed > MAX_FAILURE_RATE * reps:
            raise NumericalError(f"{n_failed} of {reps} replications failed for {truth}, n={n}")
    if truth.family is Family.LINDLEY:
        correct = np.count_nonzero(t[~failed] > 0.0)
    else:
        correct = np.count_nonzero(t[~failed] < 0.0)
    p = correct / reps
    return PcsEstimate(
        truth=truth,
        n=n,
        reps=reps,
        seed=seed,
        pcs_mc=p,
        std_error=math.sqrt(p * (1.0 - p) / reps),
        pcs_asymptotic=pcs_asymptotic(truth, n),
        failures=n_failed,
    )


@dataclass(frozen=True)
class PcsTable:
    """Grid of estimates, one row per truth and one column per sample size."""

    truths: tuple[Model, ...]
    ns: tuple[int, ...]
    cells: tuple[tuple[PcsEstimate, ...], ...]

    def cell(self, truth: Model, n: int) -> PcsEstimate:
        return self.cells[self.truths.index(truth)][self.ns.index(n)]

    def rows(self) -> list[dict[str, object]]:
        """Flat records, one per truth, with ``mc_<n>`` and ``asym_<n>`` columns."""
        out = []
        for truth, row in zip(self.truths, self.cells):
            rec: dict[str, object] = {"family": truth.family.value, "param": truth.param}
            for est in row:
                rec[f"mc_{est.n}"] = est.pcs_mc
                rec[f"asym_{est.n}"] = est.pcs_asymptotic
            out.append(rec)
        return out


def pcs_table(truths: Sequence[Model], ns: Sequence[int] = DEFAULT_NS, reps: int = DEFAULT_REPS,
              seed: int = DEFAULT_SEED, workers: int | None = None) -> PcsTable:
    """Monte Carlo and asymptotic PCS for every ``(truth, n)`` pair.

    Every cell uses the same ``seed``, which pairs replications across cells.
    """
    if not truths or not ns:
        raise ValueError("truths and ns must be non-empty")
    cells = []
    for truth in truths:
        row = []
        for n in ns:
            try:
                row.append(simulate_pcs(truth, n, reps, seed, workers))
            except Exception as exc:
                raise type(exc)(f"cell ({truth}, n={n}): {exc}") from exc
        cells.append(tuple(row))
    return PcsTable(tuple(truths), tuple(ns), tuple(cells))
