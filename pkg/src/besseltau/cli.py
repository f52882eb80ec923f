"""Batch command-line front end.

One JSON configuration document (file or standard input) drives every
subcommand; flags exist only for selecting the config source.  Output is
plot-ready CSV or versioned JSON, written with 17 significant digits and
a fixed enumeration order so identical configs produce byte-identical
files.

Exit codes: 0 success, 2 configuration/validation error, 3 numerical
error (pole, degeneracy, non-convergence).
"""

import json
import sys

import click
import numpy as np

from .errors import BesselTauError, ConfigError
from .kernel import (
    ModeMatrices,
    fredholm_det,
    kernel_a,
    kernel_d,
    mode_matrix_a,
    mode_matrix_d,
    modes_by_quadrature,
    rank_one_residual,
)
from .monodromy import MonodromyParams
from .nekrasov import (
    SeriesTruncation,
    check_lemma_identities,
    quasi_periodicity_residual,
    tau_series_terms,
    z_dual_terms,
)
from .partitions import YoungDiagram, maya_from_young, partitions_of, young_from_maya
from .tau import METHODS, ode_residual, tau, zeta

CSV_HEADER = (
    "t_re,t_im,tau_fred_re,tau_fred_im,tau_maya_re,tau_maya_im,"
    "tau_nek_re,tau_nek_im,zeta_re,zeta_im,ode_residual,est_error"
)

DEFAULT_CONFIG = {
    "sigma": [-0.13, 0.0],
    "eta": [0.11, 0.0],
    "t_grid": {"start": 0.05, "stop": 0.05, "count": 1, "spacing": "linear"},
    "method": "all",
    "N_modes": 12,
    "weight_cutoff": 6,
    "charge_cutoff": 2,
    "fd_step": 1e-3,
    "tolerance": 1e-8,
    "output": None,
    "format": "csv",
}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _load_config(path):
    cfg = dict(DEFAULT_CONFIG)
    cfg["t_grid"] = dict(DEFAULT_CONFIG["t_grid"])
    if path is None:
        return cfg
    try:
        if path == "-":
            user = json.load(sys.stdin)
        else:
            with open(path) as fh:
                user = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    if not isinstance(user, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(user) - set(DEFAULT_CONFIG)
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    grid = user.pop("t_grid", None)
    cfg.update(user)
    if grid is not None:
        if not isinstance(grid, dict):
            raise ConfigError("t_grid must be an object")
        bad = set(grid) - set(DEFAULT_CONFIG["t_grid"])
        if bad:
            raise ConfigError(f"unknown t_grid fields: {sorted(bad)}")
        cfg["t_grid"].update(grid)
    return cfg


def _complex_field(cfg, name) -> complex:
    val = cfg[name]
    if not (isinstance(val, (list, tuple)) and len(val) == 2):
        raise ConfigError(f"{name} must be a [re, im] pair")
    try:
        return complex(float(val[0]), float(val[1]))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{name} components must be numbers") from exc


def _validate(cfg):
    """RunConfig -> (params, t values, methods, trunc) or ConfigError."""
    sigma = _complex_field(cfg, "sigma")
    eta = _complex_field(cfg, "eta")
    try:
        params = MonodromyParams(sigma, eta)
    except BesselTauError as exc:
        raise ConfigError(str(exc)) from exc

    grid = cfg["t_grid"]
    try:
        start, stop = float(grid["start"]), float(grid["stop"])
        count = int(grid["count"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad t_grid: {exc}") from exc
    spacing = grid.get("spacing", "linear")
    if count < 1:
        raise ConfigError(f"t_grid.count must be >= 1, got {count}")
    if spacing not in ("linear", "log"):
        raise ConfigError(f"t_grid.spacing must be 'linear' or 'log', got {spacing!r}")
    if spacing == "log" and start <= 0:
        raise ConfigError(f"t_grid.start must be > 0 for log spacing, got {start}")
    if count == 1:
        ts = [start]
    elif spacing == "linear":
        ts = list(np.linspace(start, stop, count))
    else:
        ts = list(np.geomspace(start, stop, count))

    method = cfg["method"]
    if method == "all":
        methods = list(METHODS)
    elif method in METHODS:
        methods = [method]
    else:
        raise ConfigError(f"method must be one of {METHODS + ('all',)}, got {method!r}")

    n_modes = int(cfg["N_modes"])
    if n_modes < 1:
        raise ConfigError(f"N_modes must be >= 1, got {n_modes}")
    w, q = int(cfg["weight_cutoff"]), int(cfg["charge_cutoff"])
    if w < 0 or q < 0:
        raise ConfigError(f"cutoffs must be >= 0, got weight {w}, charge {q}")
    fd_step = float(cfg["fd_step"])
    if fd_step <= 0:
        raise ConfigError(f"fd_step must be > 0, got {fd_step}")
    if cfg["format"] not in ("csv", "json"):
        raise ConfigError(f"format must be 'csv' or 'json', got {cfg['format']!r}")
    return params, ts, methods, SeriesTruncation(w, q), n_modes, fd_step


def _write(cfg, text):
    if cfg["output"]:
        with open(cfg["output"], "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _emit_records(cfg, records):
    """Records are dicts of column name -> float or None."""
    columns = CSV_HEADER.split(",")
    if cfg["format"] == "json":
        payload = {"schema": 1, "records": records}
        _write(cfg, json.dumps(payload, indent=2, default=float) + "\n")
        return
    lines = [CSV_HEADER]
    for rec in records:
        lines.append(
            ",".join("" if rec[c] is None else _fmt(rec[c]) for c in columns)
        )
    _write(cfg, "\n".join(lines) + "\n")


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _run_guarded(fn):
    try:
        fn()
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(2)
    except _Fail as exc:
        click.echo(str(exc), err=True)
        sys.exit(exc.code)
    except BesselTauError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        sys.exit(3)
    except np.linalg.LinAlgError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        sys.exit(3)


_CONFIG_OPT = click.option(
    "-c",
    "--config",
    "config_path",
    default=None,
    help="JSON config file ('-' for stdin); omit for built-in defaults.",
)


@click.group(help=__doc__ + f"\nCSV columns: {CSV_HEADER}")
def main():
    pass


@main.command(name="tau", help="Evaluate tau (and zeta, ODE residual) over the t-grid.")
@_CONFIG_OPT
def tau_cmd(config_path):
    def run():
        cfg = _load_config(config_path)
        params, ts, methods, trunc, n_modes, fd_step = _validate(cfg)
        records = []
        for t in ts:
            rec = dict.fromkeys(CSV_HEADER.split(","))
            rec["t_re"], rec["t_im"] = t, 0.0
            est = 0.0
            col = {"fredholm": "tau_fred", "maya": "tau_maya", "nekrasov": "tau_nek"}
            for m in methods:
                tv = tau(t, params, m, n_modes=n_modes, trunc=trunc, force=True)
                rec[f"{col[m]}_re"], rec[f"{col[m]}_im"] = tv.tau.real, tv.tau.imag
                est = max(est, tv.est_error)
            zmethod = "maya" if "maya" in methods else methods[0]
            if t > 0:
                z = zeta(t, params, zmethod, h=fd_step, n_modes=n_modes, trunc=trunc)
                rec["zeta_re"], rec["zeta_im"] = z.real, z.imag
                rec["ode_residual"] = ode_residual(
                    t, params, zmethod, h=fd_step, n_modes=n_modes, trunc=trunc
                )
            rec["est_error"] = est
            records.append(rec)
        _emit_records(cfg, records)

    _run_guarded(run)


@main.command(help="Emit series coefficients as a table of (exponent, coefficient).")
@_CONFIG_OPT
def series(config_path):
    def run():
        cfg = _load_config(config_path)
        params, _, methods, trunc, _, _ = _validate(cfg)
        use_maya = methods == ["maya"]
        terms = (
            tau_series_terms(params, trunc)
            if use_maya
            else z_dual_terms(params, trunc)
        )
        lines = ["charge,weight,exponent_re,exponent_im,coeff_re,coeff_im"]
        for n, k, e, c in terms:
            e, c = complex(e), complex(c)
            lines.append(
                f"{n},{k},{_fmt(e.real)},{_fmt(e.imag)},{_fmt(c.real)},{_fmt(c.imag)}"
            )
        _write(cfg, "\n".join(lines) + "\n")

    _run_guarded(run)


@main.command(help="Emit closed-form mode matrices and their quadrature comparison.")
@_CONFIG_OPT
def modes(config_path):
    def run():
        cfg = _load_config(config_path)
        params, ts, _, _, n_modes, _ = _validate(cfg)
        t = ts[0]
        n = min(n_modes, 8)
        a_closed = mode_matrix_a(params, n)
        d_closed = mode_matrix_d(params, t, n)
        a_quad = modes_by_quadrature(
            lambda zp, z: kernel_a(params, zp, z), n, radius=1.0, block="a"
        )
        d_quad = modes_by_quadrature(
            lambda zp, z: kernel_d(params, t, zp, z), n, radius=1.0, block="d"
        )
        lines = ["block,row,col,closed_re,closed_im,quad_re,quad_im,abs_diff"]
        for name, closed, quad in (("a", a_closed, a_quad), ("d", d_closed, d_quad)):
            for r in range(2 * n):
                for c in range(2 * n):
                    lines.append(
                        f"{name},{r},{c},{_fmt(closed[r, c].real)},"
                        f"{_fmt(closed[r, c].imag)},{_fmt(quad[r, c].real)},"
                        f"{_fmt(quad[r, c].imag)},{_fmt(abs(closed[r, c] - quad[r, c]))}"
                    )
        _write(cfg, "\n".join(lines) + "\n")
        click.echo(
            f"max |closed - quadrature|: a = {np.max(np.abs(a_closed - a_quad)):.3e}, "
            f"d = {np.max(np.abs(d_closed - d_quad)):.3e}",
            err=True,
        )

    _run_guarded(run)


@main.command(help="Refinement study: determinant vs N and series vs weight cutoff.")
@_CONFIG_OPT
def convergence(config_path):
    def run():
        cfg = _load_config(config_path)
        params, ts, _, trunc, n_modes, _ = _validate(cfg)
        t = ts[0]
        lines = ["study,level,value_re,value_im,abs_change"]
        prev = None
        for n in range(2, n_modes + 1, 2):
            val = fredholm_det(ModeMatrices.build(params, t, n))
            change = abs(val - prev) if prev is not None else float("nan")
            lines.append(f"fredholm_N,{n},{_fmt(val.real)},{_fmt(val.imag)},{_fmt(change)}")
            prev = val
        prev = None
        for w in range(trunc.weight_cutoff + 1):
            sub = SeriesTruncation(w, trunc.charge_cutoff)
            val = sum(c * t**e for (_, _, e, c) in tau_series_terms(params, sub))
            change = abs(val - prev) if prev is not None else float("nan")
            lines.append(f"maya_W,{w},{_fmt(val.real)},{_fmt(val.imag)},{_fmt(change)}")
            prev = val
        _write(cfg, "\n".join(lines) + "\n")

    _run_guarded(run)


@main.command(help="Run the full invariant/identity suite with a pass/fail summary.")
@_CONFIG_OPT
def check(config_path):
    def run():
        cfg = _load_config(config_path)
        params, ts, _, trunc, n_modes, fd_step = _validate(cfg)
        t = next((x for x in ts if x > 0), 0.05)
        results = []

        def record(name, value, tol):
            results.append((name, value, tol, value < tol))

        record("rank_one_a", rank_one_residual(params, 6, "a"), 1e-10)
        record("rank_one_d", rank_one_residual(params, 6, "d"), 1e-10)

        n = 4
        quad = modes_by_quadrature(
            lambda zp, z: kernel_a(params, zp, z), n, radius=1.0, block="a"
        )
        record(
            "quadrature_modes_a",
            float(np.max(np.abs(quad - mode_matrix_a(params, n)))),
            1e-10,
        )
        quad = modes_by_quadrature(
            lambda zp, z: kernel_d(params, t, zp, z), n, radius=1.0, block="d"
        )
        record(
            "quadrature_modes_d",
            float(np.max(np.abs(quad - mode_matrix_d(params, t, n)))),
            1e-10,
        )

        lemmas = check_lemma_identities(params.nu, weight_cutoff=3, charge_cutoff=2)
        record("maya_vs_box_weights", lemmas["maya_vs_box"], 1e-10)
        record("cauchy_vs_inst_weights", lemmas["cauchy_vs_inst"], 1e-10)

        vals = {
            m: tau(t, params, m, n_modes=n_modes, trunc=trunc, force=True).tau
            for m in METHODS
        }
        worst = max(
            abs(vals[a] - vals[b]) / abs(vals[b])
            for a in METHODS
            for b in METHODS
            if a < b
        )
        record("three_route_agreement", worst, float(cfg["tolerance"]))

        record(
            "sigma_form_ode", ode_residual(t, params, "maya", trunc=trunc), 1e-6
        )
        record(
            "quasi_periodicity",
            quasi_periodicity_residual(params, SeriesTruncation(4, trunc.charge_cutoff)),
            1e-11,
        )

        shifted_eta = MonodromyParams(params.sigma, params.eta + 0.5)
        t_eta = tau(t, shifted_eta, "nekrasov", trunc=trunc, force=True).tau
        record(
            "eta_half_periodicity",
            abs(t_eta - vals["nekrasov"]) / abs(vals["nekrasov"]),
            1e-13,
        )

        roundtrip = 0
        for w in range(7):
            for rows in partitions_of(w):
                for q in range(-3, 4):
                    y = YoungDiagram(rows)
                    y2, q2 = young_from_maya(maya_from_young(y, q))
                    if y2.rows != y.rows or q2 != q:
                        roundtrip += 1
        record("maya_young_roundtrip_failures", float(roundtrip), 1)

        width = max(len(name) for name, *_ in results)
        ok = True
        for name, value, tol, passed in results:
            ok = ok and passed
            click.echo(
                f"{name:<{width}}  {value:12.3e}  < {tol:.0e}  "
                f"{'PASS' if passed else 'FAIL'}"
            )
        if not ok:
            raise _Fail(3, "one or more checks failed")
        click.echo("all checks passed")

    _run_guarded(run)


if __name__ == "__main__":
    main()
