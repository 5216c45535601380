"""Command-line front end.

Every subcommand builds a report ``{"command", "inputs", "results",
"diagnostics"}`` and writes it as JSON, CSV or aligned text. Failures exit
non-zero with ``{"command", "error": {"type", "message", ...}}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import __version__
from .asymptotics import asymptotic_summary
from .datasets import read_sample
from .discrimination import discriminate
from .distributions import Family, Model, lindley, xgamma
from .errors import DomainError, InputError, NumericalError
from .estimation import fit_lindley, fit_xgamma
from .gof import gof_report
from .montecarlo import DEFAULT_REPS, DEFAULT_SEED, DEFAULT_NS, simulate_pcs
from .numerics import DEFAULT_QUAD, QuadratureSpec
from .sample_size import LAMBDA_GRID, THETA_GRID, plan_min_sample_size, sample_size_table

__all__ = ["RunConfig", "build_report", "render", "run", "main", "parse_grid"]

COMMANDS = ("fit", "discriminate", "asymptotics", "sample-size", "simulate", "gof")
DEFAULT_EDGES = {"ball_bearings": (35.0, 55.0, 80.0, 100.0), "bank_waiting_times": (5.0, 10.0, 15.0, 20.0)}

EXIT_OK, EXIT_NUMERICAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    data: str | None = None
    out: str | None = None
    format: str = "json"
    seed: int = DEFAULT_SEED
    reps: int = DEFAULT_REPS
    p_star: float = 0.90
    d_star: float = 0.03
    family: str = "both"
    grid: str | None = None
    theta_grid: str | None = None
    ns: tuple[int, ...] = DEFAULT_NS
    edges: tuple[float, ...] | None = None
    tol: float = DEFAULT_QUAD.abs_tol
    workers: int | None = None
    rule: str = "max"
    extra: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.reps < 1:
            raise UsageError("--reps must be >= 1")
        if not 0.5 < self.p_star < 1.0:
            raise UsageError("--pstar must lie in (0.5, 1)")
        if not 0.0 <= self.d_star <= 1.0:
            raise UsageError("--dstar must lie in [0, 1]")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.family not in ("lindley", "xgamma", "both"):
            raise UsageError("--family must be lindley, xgamma or both")
        if self.command in ("fit", "discriminate", "gof") and not self.data:
            raise UsageError(f"{self.command} needs --data")

    @property
    def quad(self) -> QuadratureSpec:
        return QuadratureSpec(abs_tol=self.tol)


def parse_grid(spec: str | None, default: Sequence[float]) -> tuple[float, ...]:
    """``lo:hi`` keeps default grid values inside ``[lo, hi]``; ``lo:hi:step``
    builds an arithmetic grid; ``a,b,c`` lists values explicitly."""
    if spec is None:
        return tuple(default)
    try:
        if ":" in spec:
            parts = [float(p) for p in spec.split(":")]
            if len(parts) == 2:
                lo, hi = parts
                grid = tuple(v for v in default if lo - 1e-12 <= v <= hi + 1e-12)
            elif len(parts) == 3:
                lo, hi, step = parts
                if step <= 0:
                    raise UsageError("grid step must be positive")
                count = int(math.floor((hi - lo) / step + 1e-9)) + 1
                grid = tuple(round(lo + i * step, 12) for i in range(count))
            else:
                raise UsageError(f"bad grid {spec!r}; expected lo:hi[:step]")
        else:
            grid = tuple(float(p) for p in spec.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"bad grid {spec!r}; expected lo:hi[:step] or a comma list") from None
    if not grid:
        raise UsageError(f"grid {spec!r} selects no parameter values")
    if any(v <= 0 for v in grid):
        raise UsageError("grid values must be positive")
    return grid


def _model(family: Family, p: float) -> Model:
    return lindley(p) if family is Family.LINDLEY else xgamma(p)


def _families(cfg: RunConfig) -> list[Family]:
    return [Family.LINDLEY, Family.XGAMMA] if cfg.family == "both" else [Family(cfg.family)]


def _fit_dict(fit) -> dict[str, Any]:
    return {
        "family": fit.model.family.value,
        "mle": fit.param,
        "log_likelihood": fit.log_likelihood,
    }


def _fit_diag(fit) -> dict[str, Any]:
    return {"iterations": fit.iterations, "score_residual": fit.residual}


def _cmd_fit(cfg: RunConfig) -> tuple[dict, Any, dict]:
    sample = read_sample(cfg.data)
    fits = [fit_lindley(sample), fit_xgamma(sample)]
    inputs = {"data": cfg.data, "n": sample.n, "mean": sample.mean}
    results = {"fits": [_fit_dict(f) for f in fits]}
    diag = {f.model.family.value: _fit_diag(f) for f in fits}
    return inputs, results, diag


def _cmd_discriminate(cfg: RunConfig) -> tuple[dict, Any, dict]:
    sample = read_sample(cfg.data)
    r = discriminate(sample)
    inputs = {"data": cfg.data, "n": sample.n, "mean": sample.mean}
    results = {
        "T": r.T,
        "T_normalized": r.T_normalized,
        "selected": r.selected.value,
        "fits": [_fit_dict(r.lindley_fit), _fit_dict(r.xgamma_fit)],
    }
    diag = {"lindley": _fit_diag(r.lindley_fit), "xgamma": _fit_diag(r.xgamma_fit)}
    return inputs, results, diag


def _cmd_asymptotics(cfg: RunConfig) -> tuple[dict, Any, dict]:
    tables: dict[str, list[dict[str, Any]]] = {}
    for fam in _families(cfg):
        if fam is Family.LINDLEY:
            grid = parse_grid(cfg.grid, LAMBDA_GRID)
            rows = []
            for p in grid:
                s = asymptotic_summary(lindley(p), cfg.quad)
                rows.append({"lambda": p, "AM_LD": s.am, "AV_LD": s.av, "theta_tilde": s.pseudo_true_param})
            tables["lindley"] = rows
        else:
            grid = parse_grid(cfg.theta_grid if cfg.family == "both" else cfg.grid, THETA_GRID)
            rows = []
            for p in grid:
                s = asymptotic_summary(xgamma(p), cfg.quad)
                rows.append({"theta": p, "AM_XG": s.am, "AV_XG": s.av, "lambda_tilde": s.pseudo_true_param})
            tables["xgamma"] = rows
    inputs = {"family": cfg.family, "grid": cfg.grid, "tol": cfg.tol}
    return inputs, tables, {}


def _ss_rows(family: Family, rows) -> list[dict[str, Any]]:
    key = "lambda" if family is Family.LINDLEY else "theta"
    other = "theta_tilde" if family is Family.LINDLEY else "lambda_tilde"
    return [{key: r.param, other: r.pseudo_true_param, "n": r.n_required, "K-S": r.ks_distance} for r in rows]


def _cmd_sample_size(cfg: RunConfig) -> tuple[dict, Any, dict]:
    lam_grid = parse_grid(cfg.grid, LAMBDA_GRID)
    theta_grid = parse_grid(cfg.theta_grid, THETA_GRID)
    plan = plan_min_sample_size(cfg.p_star, cfg.d_star, lam_grid, theta_grid, rule=cfg.rule, spec=cfg.quad)
    results = {
        "lindley": _ss_rows(Family.LINDLEY, plan.lindley_case.rows),
        "xgamma": _ss_rows(Family.XGAMMA, plan.xgamma_case.rows),
        "plan": {
            "lindley": {"eligible": list(plan.lindley_case.eligible), "n": plan.lindley_case.n,
                        "discrimination_needed": plan.lindley_case.discrimination_needed},
            "xgamma": {"eligible": list(plan.xgamma_case.eligible), "n": plan.xgamma_case.n,
                       "discrimination_needed": plan.xgamma_case.discrimination_needed},
            "combined_n": plan.combined_n,
        },
    }
    inputs = {"pstar": cfg.p_star, "dstar": cfg.d_star, "lambda_grid": list(lam_grid),
              "theta_grid": list(theta_grid), "rule": cfg.rule, "tol": cfg.tol}
    diag = {"note": "n = ceil(z^2 * AV / AM^2) from the quadrature AM and AV; "
                    "published sample-size rows away from lambda=0.78 / theta=1.26 do not follow this formula"}
    return inputs, results, diag


def _cmd_simulate(cfg: RunConfig) -> tuple[dict, Any, dict]:
    tables: dict[str, list[dict[str, Any]]] = {}
    failures = 0
    for fam in _families(cfg):
        default = LAMBDA_GRID if fam is Family.LINDLEY else THETA_GRID
        spec = cfg.grid if (cfg.family != "both" or fam is Family.LINDLEY) else cfg.theta_grid
        key = "lambda" if fam is Family.LINDLEY else "theta"
        rows = []
        for p in parse_grid(spec, default):
            for n in cfg.ns:
                est = simulate_pcs(_model(fam, p), n, cfg.reps, cfg.seed, cfg.workers)
                failures += est.failures
                rows.append({key: p, "n": n, "pcs_mc": est.pcs_mc, "std_error": est.std_error,
                             "pcs_asymptotic": est.pcs_asymptotic})
        tables[fam.value] = rows
    inputs = {"family": cfg.family, "reps": cfg.reps, "seed": cfg.seed, "ns": list(cfg.ns)}
    return inputs, tables, {"failed_replications": failures}


def _cmd_gof(cfg: RunConfig) -> tuple[dict, Any, dict]:
    sample = read_sample(cfg.data)
    edges = cfg.edges
    if edges is None:
        name = cfg.data.split(":", 1)[1] if cfg.data.startswith("builtin:") else None
        if name not in DEFAULT_EDGES:
            raise UsageError("gof needs --edges for non-builtin data")
        edges = DEFAULT_EDGES[name]
    fits = {Family.LINDLEY: fit_lindley(sample), Family.XGAMMA: fit_xgamma(sample)}
    reports = []
    for fam in _families(cfg):
        fitted = fits[fam]
        rep = gof_report(sample, fitted.model, edges, fitted_params=1)
        reports.append({
            "family": fam.value,
            "mle": fitted.param,
            "ks_statistic": rep.ks_statistic,
            "ks_p_value": rep.ks_p_value,
            "chi_square": rep.chi_square,
            "chi_df": rep.chi_df,
            "chi_p_value": rep.chi_p_value,
            "bins": [{"lower": b.lower, "upper": None if math.isinf(b.upper) else b.upper,
                      "observed": b.observed, "expected": b.expected} for b in rep.bins],
        })
    inputs = {"data": cfg.data, "n": sample.n, "edges": list(edges)}
    return inputs, {"reports": reports}, {}


_HANDLERS = {
    "fit": _cmd_fit,
    "discriminate": _cmd_discriminate,
    "asymptotics": _cmd_asymptotics,
    "sample-size": _cmd_sample_size,
    "simulate": _cmd_simulate,
    "gof": _cmd_gof,
}


def _plain(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def build_report(cfg: RunConfig) -> dict[str, Any]:
    inputs, results, diag = _HANDLERS[cfg.command](cfg)
    return _plain({
        "command": cfg.command,
        "inputs": inputs,
        "results": results,
        "diagnostics": {"version": __version__, **diag},
    })


def _tables(results: Any) -> list[tuple[str, list[dict[str, Any]]]]:
    """Row tables inside ``results``; scalar entries become a one-row table."""
    out = []
    scalars = {}
    for key, val in results.items():
        if isinstance(val, list) and val and all(isinstance(r, dict) for r in val):
            out.append((key, [{k: v for k, v in r.items() if not isinstance(v, (list, dict))} for r in val]))
        elif not isinstance(val, (list, dict)):
            scalars[key] = val
        elif isinstance(val, dict):
            flat = {k: v for k, v in val.items() if not isinstance(v, (list, dict))}
            for sub, sv in val.items():
                if isinstance(sv, dict):
                    flat.update({f"{sub}.{k}": v for k, v in sv.items() if not isinstance(v, (list, dict))})
            if flat:
                out.append((key, [flat]))
    if scalars:
        out.insert(0, ("summary", [scalars]))
    return out


def _fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.6g}" if abs(v) >= 1e-3 or v == 0 else f"{v:.5e}"
    return "" if v is None else str(v)


def render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    for name, rows in _tables(report.get("results", {})):
        cols: list[str] = []
        for r in rows:
            cols.extend(k for k in r if k not in cols)
        if fmt == "csv":
            buf.write(f"# {name}\n")
            w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        else:
            cells = [[_fmt(r.get(c)) for c in cols] for r in rows]
            widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
            buf.write(f"{report['command']}: {name}\n")
            buf.write("  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
            for row in cells:
                buf.write("  ".join(v.rjust(w) for v, w in zip(row, widths)) + "\n")
            buf.write("\n")
    return buf.getvalue()


def _error_report(command: str | None, exc: BaseException) -> dict[str, Any]:
    err: dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, InputError) and exc.line is not None:
        err["line"] = exc.line
    if isinstance(exc, NumericalError):
        err["estimate"] = exc.estimate
        err["error_bound"] = exc.error_bound
    return _plain({"command": command, "error": err})


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg: RunConfig) -> int:
    """Execute ``cfg`` and write the report; returns the process exit status."""
    try:
        report = build_report(cfg)
    except (InputError, DomainError, UsageError, ValueError) as exc:
        _emit(json.dumps(_error_report(cfg.command, exc), indent=2) + "\n", None)
        return EXIT_USAGE
    except NumericalError as exc:
        _emit(json.dumps(_error_report(cfg.command, exc), indent=2) + "\n", None)
        return EXIT_NUMERICAL
    try:
        _emit(render(report, cfg.format), cfg.out)
    except OSError as exc:
        _emit(json.dumps(_error_report(cfg.command, InputError(f"cannot write {cfg.out}: {exc.strerror}")),
                         indent=2) + "\n", None)
        return EXIT_USAGE
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or any(v < 2 for v in vals):
        raise argparse.ArgumentTypeError("sample sizes must be integers >= 2")
    return vals


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", default="json", choices=("json", "csv", "text"))
    common.add_argument("--tol", type=float, default=DEFAULT_QUAD.abs_tol, help="quadrature absolute tolerance")

    parser = _Parser(prog="lindley-xgamma",
                     description="Choose between Lindley and xgamma fits by the ratio of maximized likelihoods.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    data_help = "file with one positive value per line, or builtin:ball_bearings / builtin:bank_waiting_times"
    for name in ("fit", "discriminate"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--data", required=True, help=data_help)

    p = sub.add_parser("gof", parents=[common])
    p.add_argument("--data", required=True, help=data_help)
    p.add_argument("--edges", type=_float_list, help="inner bin edges e1,e2,...")
    p.add_argument("--family", default="both", choices=("lindley", "xgamma", "both"))

    p = sub.add_parser("asymptotics", parents=[common])
    p.add_argument("--family", default="both", choices=("lindley", "xgamma", "both"))
    p.add_argument("--grid", help="lo:hi[:step] or a,b,c (lambda grid, or the single family's grid)")
    p.add_argument("--theta-grid", help="xgamma grid when --family both")

    p = sub.add_parser("sample-size", parents=[common])
    p.add_argument("--pstar", type=float, default=0.90)
    p.add_argument("--dstar", type=float, default=0.03)
    p.add_argument("--grid", help="lambda grid, lo:hi[:step] or a,b,c")
    p.add_argument("--theta-grid", help="theta grid, lo:hi[:step] or a,b,c")
    p.add_argument("--rule", default="max", choices=("max", "boundary"))

    p = sub.add_parser("simulate", parents=[common])
    p.add_argument("--family", default="both", choices=("lindley", "xgamma", "both"))
    p.add_argument("--grid", help="lo:hi[:step] or a,b,c (lambda grid, or the single family's grid)")
    p.add_argument("--theta-grid", help="xgamma grid when --family both")
    p.add_argument("--ns", type=_int_list, default=DEFAULT_NS, help="sample sizes, comma separated")
    p.add_argument("--reps", type=int, default=DEFAULT_REPS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, help="threads for replications (result does not depend on it)")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    get = lambda k, d=None: getattr(ns, k, d)  # noqa: E731
    return RunConfig(
        command=ns.command,
        data=get("data"),
        out=get("out"),
        format=get("format", "json"),
        seed=get("seed", DEFAULT_SEED),
        reps=get("reps", DEFAULT_REPS),
        p_star=get("pstar", 0.90),
        d_star=get("dstar", 0.03),
        family=get("family", "both"),
        grid=get("grid"),
        theta_grid=get("theta_grid"),
        ns=get("ns", DEFAULT_NS),
        edges=get("edges"),
        tol=get("tol", DEFAULT_QUAD.abs_tol),
        workers=get("workers"),
        rule=get("rule", "max"),
    )


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if a in COMMANDS), None)
    try:
        cfg = config_from_args(make_parser().parse_args(argv))
    except UsageError as exc:
        sys.stdout.write(json.dumps(_error_report(command, exc), indent=2) + "\n")
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
