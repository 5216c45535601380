"""Reading observation files and the two bundled lifetime datasets.

``ball_bearings``: revolutions (millions) before failure of 23 ball
bearings in a life test (Lawless, 1982).
``bank_waiting_times``: waiting times (minutes) before service of 100 bank
customers (Ghitany et al., 2008).
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Iterable

import numpy as np

from .distributions import Sample
from .errors import InputError

__all__ = ["BUILTIN", "parse_values", "read_sample", "load_builtin", "ball_bearings", "bank_waiting_times"]

BUILTIN = {
    "ball_bearings": "ball_bearings.csv",
    "bank_waiting_times": "bank_waiting_times.csv",
}


def parse_values(lines: Iterable[str]) -> np.ndarray:
    """One positive number per line; an optional non-numeric header on line 1.

    Blank lines are skipped. Raises :class:`InputError` naming the offending line.
    """
    values: list[float] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        # tolerate a trailing comma from spreadsheet exports
        text = text.rstrip(",").strip()
        try:
            v = float(text)
        except ValueError:
            if lineno == 1:
                continue
            raise InputError(f"not a number: {text!r}", line=lineno) from None
        if not np.isfinite(v) or v <= 0.0:
            raise InputError(f"observations must be finite and positive, got {text}", line=lineno)
        values.append(v)
    if not values:
        raise InputError("no observations found")
    return np.asarray(values)


def load_builtin(name: str) -> Sample:
    try:
        filename = BUILTIN[name]
    except KeyError:
        raise InputError(f"unknown builtin dataset {name!r}; choose from {sorted(BUILTIN)}") from None
    text = resources.files("lindley_xgamma").joinpath("data", filename).read_text()
    return Sample(parse_values(text.splitlines()))


def read_sample(path: str | Path) -> Sample:
    """Read a data file, or a bundled dataset given as ``builtin:<name>``."""
    path = str(path)
    if path.startswith("builtin:"):
        return load_builtin(path.split(":", 1)[1])
    try:
        with open(path, encoding="utf-8") as fh:
            return Sample(parse_values(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def ball_bearings() -> Sample:
    return load_builtin("ball_bearings")


def bank_waiting_times() -> Sample:
    return load_builtin("bank_waiting_times")
