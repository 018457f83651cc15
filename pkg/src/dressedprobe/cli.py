"""Command-line harness: experiment subcommands with CSV/JSON output.

Subcommands
-----------
sweep-frequency
    Re G versus probe-pump frequency difference at the fixed plane, at the
    initial arrival time and half a modulation period later.
evolve
    Intensity gain versus time at the fixed plane, plus pulse-train stats.
dispersion-scan
    Refractive index and its dipole / beyond-dipole split versus probe
    frequency.
pulse-stats
    Re-analyze a previously emitted evolve CSV.
validate
    Run the invariant suite and exit non-zero on any failure.

Rows that would hit a resonance pole are emitted with empty value cells
and a POLE marker instead of aborting the sweep.  Floats are written with
17 significant digits so files round-trip bit-exactly.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import modulation as mod
from . import pulsetrain as pt
from .config import RunConfig, config_to_dict, load_config
from .constants import CGS
from .errors import ConfigError, DressedProbeError, ResonancePole
from .validation import run_all


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format(value, ".17g")


def _write_rows(path: Path, columns: list[str], rows: list[tuple]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")


def _write_json(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _out_path(args, config: RunConfig, default_name: str) -> Path:
    if args.out is not None:
        return Path(args.out)
    return Path(config.out_dir) / default_name


def _load(args) -> RunConfig:
    config = load_config(args.config) if args.config else RunConfig()
    overrides = {}
    if args.guard is not None:
        overrides["guard"] = args.guard
    if args.steps is not None:
        overrides["steps"] = args.steps
    if overrides:
        config = dataclasses.replace(config, **overrides)
    return config


def sweep_frequency_rows(config: RunConfig) -> list[tuple]:
    """(delta, Re G at arrival, Re G half a period later, pole marker)."""
    ensemble = config.ensemble()
    pump = config.pump()
    state = config.state()
    omega_prime = config.omega_prime()
    z = config.z_fixed()
    t_solid = math.pi / omega_prime
    t_dashed = 2.0 * math.pi / omega_prime
    rows = []
    for delta in config.delta_grid.values():
        probe_omega = pump.omega_p - delta
        try:
            g_solid = mod.exponent_grid(
                ensemble,
                pump,
                state,
                probe_omega,
                np.array([z]),
                np.array([t_solid, t_dashed]),
                config.guard,
            )[0]
        except ResonancePole:
            rows.append((delta, None, None, "POLE"))
            continue
        rows.append((delta, float(g_solid[0].real), float(g_solid[1].real), ""))
    return rows


def evolve_series(config: RunConfig) -> tuple[pt.TimeSeries, dict]:
    """Gain series at the fixed plane plus its stats block."""
    if config.t_periods < 3.0:
        raise ConfigError("evolve needs a time span of >= 3 periods")
    ensemble = config.ensemble()
    pump = config.pump()
    state = config.state()
    probe = config.probe()
    omega_prime = config.omega_prime()
    period = 2.0 * math.pi / omega_prime
    z = config.z_fixed()
    spp = config.t_samples_per_period
    n = round(config.t_periods * spp)
    t0 = z / CGS.c
    dt = period / spp
    t = t0 + dt * np.arange(n)
    g = mod.exponent_grid(
        ensemble, pump, state, probe.omega, np.array([z]), t, config.guard
    )[0]
    if float(np.max(np.abs(2.0 * g.real))) > 709.0:
        raise ConfigError(
            "intensity gain exceeds double-precision range at these "
            "parameters; reduce rho, the coherence, or the plane depth"
        )
    series = pt.TimeSeries(
        z=z, t0=t0, dt=dt, gains=tuple(np.exp(2.0 * g.real))
    )
    stats: dict = {
        "z_cm": z,
        "omega_prime_rad_per_s": omega_prime,
        "nominal_period_s": period,
    }
    try:
        measured = pt.analyze_train(series, omega_prime)
    except DressedProbeError as exc:
        stats["error"] = type(exc).__name__
        stats["message"] = str(exc)
        return series, stats
    if abs(measured.period - period) > 1e-6 * period:
        raise ConfigError(
            f"measured period {measured.period!r} deviates from 2 pi / w' "
            f"= {period!r} by more than 1e-6 relative"
        )
    stats.update(
        period_s=measured.period,
        fwhm_s=measured.fwhm,
        peak_gain=measured.peak_gain,
        min_gain=measured.min_gain,
        depth=measured.depth,
        fwhm_closed_form_s=pt.fwhm_closed_form(measured.depth, omega_prime),
        fwhm_over_250fs=measured.fwhm / 250e-15,
    )
    return series, stats


def dispersion_rows(config: RunConfig) -> list[tuple]:
    """(omega, n0, dipole part, beyond-dipole part, pole marker)."""
    from .dispersion import refractive_index

    ensemble = config.ensemble()
    pump = config.pump()
    state = config.state()
    rows = []
    for delta in config.delta_grid.values():
        omega = pump.omega_p - delta
        try:
            result = refractive_index(
                ensemble, pump, state, omega, config.guard
            )
        except ResonancePole:
            rows.append((omega, None, None, None, "POLE"))
            continue
        rows.append(
            (
                omega,
                result.n0,
                result.dipole_part,
                result.beyond_dipole_part,
                "",
            )
        )
    return rows


def _emit_table(
    args, config: RunConfig, name: str, columns: list[str], rows: list[tuple]
) -> Path:
    if args.format == "json":
        path = _out_path(args, config, f"{name}.json")
        _write_json(
            path,
            {"columns": columns, "rows": [list(r) for r in rows]},
        )
    else:
        path = _out_path(args, config, f"{name}.csv")
        _write_rows(path, columns, rows)
    return path


def _cmd_sweep_frequency(args) -> int:
    config = _load(args)
    rows = sweep_frequency_rows(config)
    path = _emit_table(
        args,
        config,
        "sweep_frequency",
        ["delta_rad_per_s", "re_g_solid", "re_g_dashed", "pole"],
        rows,
    )
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def _cmd_evolve(args) -> int:
    config = _load(args)
    series, stats = evolve_series(config)
    rows = list(zip(series.times.tolist(), series.gains))
    columns = ["t_s", "intensity_gain"]
    if args.format == "json":
        path = _out_path(args, config, "evolve.json")
        _write_json(
            path,
            {"columns": columns, "rows": [list(r) for r in rows], "stats": stats},
        )
        print(f"wrote {len(rows)} rows + stats to {path}")
    else:
        path = _out_path(args, config, "evolve.csv")
        _write_rows(path, columns, rows)
        stats_path = path.with_suffix(path.suffix + ".stats.json")
        _write_json(stats_path, stats)
        print(f"wrote {len(rows)} rows to {path}, stats to {stats_path}")
    if "error" in stats:
        print(f"stats: {stats['error']}: {stats['message']}")
    return 0


def _cmd_dispersion_scan(args) -> int:
    config = _load(args)
    rows = dispersion_rows(config)
    path = _emit_table(
        args,
        config,
        "dispersion_scan",
        [
            "omega_rad_per_s",
            "n0",
            "dipole_part",
            "beyond_dipole_part",
            "pole",
        ],
        rows,
    )
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def read_evolve_csv(path: str | Path) -> pt.TimeSeries:
    """Parse a CSV produced by the evolve subcommand back into a series."""
    lines = Path(path).read_text().strip().splitlines()
    if not lines or lines[0].split(",")[:2] != ["t_s", "intensity_gain"]:
        raise ConfigError(f"{path} is not an evolve series CSV")
    times = []
    gains = []
    for line in lines[1:]:
        try:
            t_text, gain_text = line.split(",")[:2]
            times.append(float(t_text))
            gains.append(float(gain_text))
        except ValueError as exc:
            raise ConfigError(f"{path}: malformed row {line!r}") from exc
    if len(times) < 2:
        raise ConfigError(f"{path} holds fewer than 2 samples")
    try:
        return pt.TimeSeries(
            z=0.0, t0=times[0], dt=times[1] - times[0], gains=tuple(gains)
        )
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _cmd_pulse_stats(args) -> int:
    config = _load(args)
    series = read_evolve_csv(args.series)
    omega_prime = config.omega_prime()
    stats: dict = {"omega_prime_rad_per_s": omega_prime, "source": str(args.series)}
    try:
        measured = pt.analyze_train(series, omega_prime)
        stats.update(
            period_s=measured.period,
            fwhm_s=measured.fwhm,
            peak_gain=measured.peak_gain,
            min_gain=measured.min_gain,
            depth=measured.depth,
        )
    except DressedProbeError as exc:
        stats["error"] = type(exc).__name__
        stats["message"] = str(exc)
    path = _out_path(args, config, "pulse_stats.json")
    _write_json(path, stats)
    print(f"wrote stats to {path}")
    return 0 if "error" not in stats else 1


def _cmd_validate(args) -> int:
    started = time.perf_counter()
    config = _load(args)
    results = run_all(config)
    elapsed = time.perf_counter() - started
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'} {result.name}: {result.detail}")
    passed = all(r.passed for r in results)
    print(
        f"{'all checks passed' if passed else 'CHECKS FAILED'} "
        f"({len(results)} checks, {elapsed:.2f} s)"
    )
    report = {
        "passed": passed,
        "elapsed_s": elapsed,
        "checks": [dataclasses.asdict(r) for r in results],
        "config": config_to_dict(config),
    }
    path = _out_path(args, config, "validate_report.json")
    _write_json(path, report)
    print(f"wrote report to {path}")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dressedprobe",
        description=(
            "Probe-wave pulse trains in a gas of pump-dressed two-level "
            "atoms (Gaussian-CGS units, angular frequencies in rad/s)"
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--out", help="output file path")
    common.add_argument(
        "--guard", type=float, help="pole guard half-width, rad/s"
    )
    common.add_argument(
        "--steps", type=int, help="characteristic integration steps"
    )
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv",
        help="table output format",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser(
        "sweep-frequency",
        parents=[common],
        help="Re G versus probe-pump frequency difference",
    )
    sweep.set_defaults(func=_cmd_sweep_frequency)

    evolve = sub.add_parser(
        "evolve", parents=[common], help="gain versus time plus train stats"
    )
    evolve.set_defaults(func=_cmd_evolve)

    scan = sub.add_parser(
        "dispersion-scan",
        parents=[common],
        help="refractive index versus probe frequency",
    )
    scan.set_defaults(func=_cmd_dispersion_scan)

    stats = sub.add_parser(
        "pulse-stats", parents=[common], help="re-analyze an evolve CSV"
    )
    stats.add_argument("--series", required=True, help="evolve CSV to analyze")
    stats.set_defaults(func=_cmd_pulse_stats)

    validate = sub.add_parser(
        "validate", parents=[common], help="run the invariant suite"
    )
    validate.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DressedProbeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
