#!/usr/bin/env python3
"""Convergence study of the two numerical oracles.

Emits a CSV with the characteristic-integration error versus step density
(expected slope: fourth order) and the finite-difference residual versus
grid density (expected slope: second order), both against the closed-form
envelope.

Usage:
    python scripts/oracle_convergence.py [--out CSV]
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

import numpy as np

from dressedprobe import (
    CGS,
    closed_form_log_amplitude,
    derive_coefficients,
    integrate_characteristic,
    load_config,
    log_amplitude_grid,
    residual_check,
)

REPO = Path(__file__).resolve().parents[1]


def run(out: Path) -> None:
    config = load_config(REPO / "configs" / "pulse_train.json")
    ensemble, pump = config.ensemble(), config.pump()
    state, probe = config.state(), config.probe()
    omega_prime = config.omega_prime()
    period = 2.0 * math.pi / omega_prime
    length = period * CGS.c
    coefs = derive_coefficients(ensemble, pump, state, probe)

    rows = []
    # 0.37 spatial periods: over a whole period the oscillatory truncation
    # terms cancel spectrally and there is no algebraic slope to see.
    z_end = 0.37 * length
    closed = closed_form_log_amplitude(
        ensemble, pump, state, probe, z_end, z_end / CGS.c
    )
    for per_period in (1000, 2000, 4000):
        numeric = integrate_characteristic(
            coefs, z_end, 0.0, math.ceil(0.37 * per_period)
        )
        rows.append(("rk4", per_period, abs(numeric - closed)))

    for n in (64, 128, 256, 512):
        z = np.linspace(0.0, length, n + 1)
        t = np.linspace(0.0, period, n + 1)
        grid = log_amplitude_grid(ensemble, pump, state, probe, z, t)
        rows.append(
            ("fd_residual", n, residual_check(grid, z, t, coefs, 64))
        )

    out.parent.mkdir(parents=True, exist_ok=True)
    lines = ["oracle,points_per_period,error"]
    lines += [f"{name},{n},{err:.17g}" for name, n, err in rows]
    out.write_text("\n".join(lines) + "\n")

    print(f"wrote {out}")
    for name in ("rk4", "fd_residual"):
        errs = [err for kind, _, err in rows if kind == name]
        ratios = ", ".join(
            f"{a / b:.1f}" for a, b in zip(errs, errs[1:])
        )
        print(f"{name:12s} error ratios per halving: {ratios}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=REPO / "out" / "oracle_convergence.csv",
        help="output CSV path",
    )
    run(parser.parse_args().out)
