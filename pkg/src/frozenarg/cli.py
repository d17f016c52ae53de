"""Command-line front end: every pipeline with file-based CSV/JSON output.

Commands
--------
forward              spectrum of the sampled discrete problem
inverse              coefficients from a full spectrum (gcd(m, l+1) = 1)
inverse-degenerate   coefficients from a reduced spectrum plus known w's
spectrum-continuous  eigenvalues of the continuous problem
reconstruct          correction-term recovery of a symmetric potential
reproduce-tables     the three benchmark tables (quadratic, tent, constant)
convergence          empirical correction-error orders across grids

Spectra files are plain CSV, one eigenvalue per row as ``re`` or ``re,im``
(# comments allowed).  Output is CSV or JSON; without --output the rendered
text goes to stdout.  All computations are deterministic, so identical
configurations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field, asdict

import numpy as np

from . import continuous, inverse
from .discrete import discrete_spectrum, sample_problem
from .errors import ConfigError, FrozenArgError
from .reconstruct import convergence_study, error_report, reconstruct_from_potential

_COMMANDS = (
    "forward",
    "inverse",
    "inverse-degenerate",
    "spectrum-continuous",
    "reconstruct",
    "reproduce-tables",
    "convergence",
)


@dataclass
class RunConfig:
    """One CLI invocation: exactly one command plus its validated flags."""

    command: str
    potential: str | None = None
    l: int | None = None
    m: int | None = None
    n_max: int | None = None
    ms: list = field(default_factory=list)
    mu_path: str | None = None
    known_w: list = field(default_factory=list)
    side: str | None = None
    output: str | None = None
    format: str = "csv"
    seed: int = 0


def _load_potential(name: str):
    if name in ("quadratic", "tent", "constant", "zero"):
        return continuous.named_potential(name)
    return continuous.potential_from_csv(name)


def _load_mu(path: str) -> np.ndarray:
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    if data.shape[1] == 1:
        return data[:, 0].astype(complex)
    if data.shape[1] == 2:
        return data[:, 0] + 1j * data[:, 1]
    raise ConfigError(f"spectrum file {path} must have 1 or 2 columns")


def _require(config: RunConfig, *names):
    for name in names:
        value = getattr(config, name.replace("-", "_"))
        missing = value is None or (isinstance(value, list) and not value)
        if missing:
            raise ConfigError(f"command {config.command!r} requires --{name.replace('_', '-')}")


def _c(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


# ---------------------------------------------------------------------------
# per-command row builders
# ---------------------------------------------------------------------------

def _run_forward(config: RunConfig):
    _require(config, "potential", "l", "m")
    pot = _load_potential(config.potential)
    xs = (math.pi / (config.l + 1)) * np.arange(1, config.l + 1)
    spec = discrete_spectrum(sample_problem(pot.q(xs), config.m))
    rows = [
        {"n": n + 1, "mu_re": mu.real, "mu_im": mu.imag, "lambda_re": lam.real, "lambda_im": lam.imag}
        for n, (mu, lam) in enumerate(zip(spec.mu, spec.lam))
    ]
    return rows, {}, None


def _run_inverse(config: RunConfig):
    _require(config, "l", "m", "mu_path")
    mu = _load_mu(config.mu_path)
    w = inverse.solve_nondegenerate(mu, config.m, l=config.l)
    h = math.pi / (config.l + 1)
    q = w / h**2
    rows = [
        {"j": j + 1, "w_re": w[j].real, "w_im": w[j].imag, "q_re": q[j].real, "q_im": q[j].imag}
        for j in range(config.l)
    ]
    return rows, {}, None


def _run_inverse_degenerate(config: RunConfig):
    _require(config, "l", "m", "mu_path", "side", "known_w")
    d = math.gcd(config.m, config.l + 1)
    data = inverse.DegenerateData(side=config.side, known_w=config.known_w, d=d)
    mu = _load_mu(config.mu_path)
    w = inverse.solve_degenerate(mu, config.m, config.l, data)
    h = math.pi / (config.l + 1)
    q = w / h**2
    rows = [
        {"j": j + 1, "w_re": w[j].real, "w_im": w[j].imag, "q_re": q[j].real, "q_im": q[j].imag}
        for j in range(config.l)
    ]
    return rows, {"d": d, "degenerate_mu": [_c(z) for z in inverse.degenerate_mu(config.l, config.m)]}, None


def _run_spectrum_continuous(config: RunConfig):
    _require(config, "potential", "n_max")
    pot = _load_potential(config.potential)
    spec = continuous.continuous_spectrum(pot, config.n_max)
    rows = [{"n": n, "lambda": lam, "degenerate": False} for n, lam in spec.odd]
    rows += [{"n": n, "lambda": lam, "degenerate": True} for n, lam in spec.even]
    rows.sort(key=lambda r: r["n"])
    return rows, {}, None


_RECONSTRUCT_COLUMNS = (
    "block", "index", "lambda_n", "lambda_nl", "lambda_tilde_nl", "delta_nl",
    "x", "q_true", "q_tilde", "delta_q",
)


def _reconstruct_rows(pot, m: int, potential_name: str):
    result = reconstruct_from_potential(pot, m)
    report = error_report(result, pot)
    rows = []
    for n, lam_n, lam_nl, tilde, delta in report.eigen_rows:
        rows.append({
            "potential": potential_name, "block": "eigenvalue", "index": n,
            "lambda_n": lam_n, "lambda_nl": lam_nl, "lambda_tilde_nl": tilde, "delta_nl": delta,
        })
    for j, x, q_true, q_tilde, delta in report.potential_rows:
        rows.append({
            "potential": potential_name, "block": "potential", "index": j,
            "x": x, "q_true": q_true, "q_tilde": q_tilde, "delta_q": delta,
        })
    return rows, report


def _run_reconstruct(config: RunConfig):
    _require(config, "potential", "m")
    pot = _load_potential(config.potential)
    rows, report = _reconstruct_rows(pot, config.m, config.potential)
    return rows, {}, report.format_text()


def _run_reproduce_tables(config: RunConfig):
    m = config.m if config.m is not None else 5
    rows = []
    texts = []
    for name in ("quadratic", "tent", "constant"):
        pot = continuous.named_potential(name)
        r, report = _reconstruct_rows(pot, m, name)
        rows += r
        texts.append(f"q = {name} (m = {m})\n{report.format_text()}")
    return rows, {"m": m}, "\n\n".join(texts)


def _run_convergence(config: RunConfig):
    _require(config, "potential", "ms")
    pot = _load_potential(config.potential)
    study = convergence_study(pot, config.ms, ns=(1, 3))
    rows = []
    for n, m, h, e in study.rows:
        rows.append({"block": "correction-error", "n": n, "m": m, "h": h, "value": e})
    for m, h, n, s in study.trapezoid_rows:
        rows.append({"block": "trapezoid-sum", "n": n, "m": m, "h": h, "value": s})
    for m, h, e in study.tail_rows:
        rows.append({"block": "tail-residual", "n": None, "m": m, "h": h, "value": e})
    slopes = {
        **{f"correction_error_n{n}": s for n, s in study.slopes.items()},
        "trapezoid_sum": study.trapezoid_slope,
        "tail_residual": study.tail_slope,
    }
    text = "\n".join(f"slope[{k}] = {'exact' if v is None else f'{v:.3f}'}" for k, v in slopes.items())
    return rows, {"slopes": slopes}, text


_RUNNERS = {
    "forward": _run_forward,
    "inverse": _run_inverse,
    "inverse-degenerate": _run_inverse_degenerate,
    "spectrum-continuous": _run_spectrum_continuous,
    "reconstruct": _run_reconstruct,
    "reproduce-tables": _run_reproduce_tables,
    "convergence": _run_convergence,
}


# ---------------------------------------------------------------------------
# rendering and dispatch
# ---------------------------------------------------------------------------

def _render_csv(rows) -> str:
    if not rows:
        return ""
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, restval="", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt_cell(v) for k, v in row.items()})
    return buf.getvalue()


def _fmt_cell(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return v


def _render_json(config: RunConfig, rows, diagnostics) -> str:
    payload = {
        "command": config.command,
        "params": {k: v for k, v in asdict(config).items() if k != "command"},
        "rows": rows,
        "diagnostics": diagnostics,
    }
    return json.dumps(payload, indent=2, default=_json_default) + "\n"


def _json_default(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    raise TypeError(f"not JSON serializable: {type(v)}")


def run(config: RunConfig) -> int:
    """Execute one configuration.  Returns the process exit status.

    Output is rendered fully in memory and written in one step, so a failing
    run never leaves a partial output file; errors go to stderr as one-line
    JSON objects.
    """
    try:
        if config.command not in _RUNNERS:
            raise ConfigError(f"unknown command {config.command!r}")
        if config.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {config.format!r}")
        rows, diagnostics, text = _RUNNERS[config.command](config)
        rendered = (
            _render_json(config, rows, diagnostics)
            if config.format == "json"
            else _render_csv(rows)
        )
        if config.output:
            with open(config.output, "w") as fh:
                fh.write(rendered)
            if text:
                print(text)
        else:
            print(text if text else rendered, end="" if not text else "\n")
        return 0
    except ConfigError as exc:
        print(json.dumps({"error": "ConfigError", "message": str(exc)}), file=sys.stderr)
        return 2
    except FrozenArgError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": "OSError", "message": str(exc)}), file=sys.stderr)
        return 1


def _parse_complex_list(text: str) -> list:
    try:
        return [complex(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex list {text!r}: {exc}") from None


def _parse_int_list(text: str) -> list:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"cannot parse integer list {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frozenarg",
        description="Spectral toolkit for the frozen-argument Sturm-Liouville problem",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--potential", help="quadratic|tent|constant|zero or a (x,q) CSV path")
        p.add_argument("--l", type=int, help="grid size")
        p.add_argument("--m", type=int, help="frozen index (x_m = a)")
        p.add_argument("--n-max", type=int, dest="n_max", help="largest eigenvalue index")
        p.add_argument("--ms", help="comma-separated grid sizes m for the convergence study")
        p.add_argument("--mu", dest="mu_path", help="CSV file of eigenvalues in the mu plane")
        p.add_argument("--known-w", dest="known_w", help="comma-separated a-priori w values")
        p.add_argument("--side", choices=("left", "right"), help="which side the known w's sit on")
        p.add_argument("--output", help="write rendered table to this path")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--seed", type=int, default=0, help="recorded in params for reproducibility")
    return parser


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    return RunConfig(
        command=args.command,
        potential=args.potential,
        l=args.l,
        m=args.m,
        n_max=args.n_max,
        ms=_parse_int_list(args.ms) if args.ms else [],
        mu_path=args.mu_path,
        known_w=_parse_complex_list(args.known_w) if args.known_w else [],
        side=args.side,
        output=args.output,
        format=args.format,
        seed=args.seed,
    )


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
    except ConfigError as exc:
        print(json.dumps({"error": "ConfigError", "message": str(exc)}), file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
