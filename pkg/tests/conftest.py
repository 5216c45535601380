from functools import lru_cache

import pytest

from lindley_xgamma.datasets import ball_bearings, bank_waiting_times
from lindley_xgamma.distributions import Family, Model
from lindley_xgamma.montecarlo import DEFAULT_REPS, DEFAULT_SEED, simulate_pcs

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def full_scale_pcs(family: str, param: float, n: int):
    """25,000-replication estimate at the default seed, shared across test modules."""
    return simulate_pcs(Model(Family(family), param), n, DEFAULT_REPS, DEFAULT_SEED)


@pytest.fixture(scope="session")
def bearings():
    return ball_bearings()


@pytest.fixture(scope="session")
def bank():
    return bank_waiting_times()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
