"""Run configuration: JSON schema, defaults, and validated loading.

All frequencies are angular (rad/s), lengths are cm, and the dipole moment
is supplied squared in CGS units (esu^2 cm^2).  The compiled-in defaults
are the parameter set used throughout the documentation: a 1e15 rad/s
transition driven 2e11 rad/s below resonance with a 2e10 rad/s Rabi
frequency, probed 2e9 rad/s below the pump.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .constants import CGS, DEFAULT_GUARD
from .dressed import (
    AtomEnsemble,
    ProbeField,
    PumpField,
    SuperpositionState,
    generalized_rabi,
)
from .errors import ConfigError, DressedProbeError


@dataclass(frozen=True)
class GridSpec:
    """Uniform 1-d grid with inclusive endpoints."""

    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ConfigError("grid range must be finite")
        if self.count < 1:
            raise ConfigError("grid count must be >= 1")
        if self.count > 1 and self.stop <= self.start:
            raise ConfigError("grid stop must exceed start")

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.count - 1)
        return [self.start + i * step for i in range(self.count)]


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters for every experiment subcommand."""

    omega0: float = 1e15
    d_squared: float = 2e-34
    rho: float = 2e15
    detuning: float = -2e11
    rabi: float = 2e10
    alpha: complex = math.sqrt(0.99)
    beta: complex = 0.1
    probe_delta: float = 2e9
    a0: float = 1.0
    z_theta: float | None = math.pi
    z_cm: float | None = None
    delta_grid: GridSpec = field(
        default_factory=lambda: GridSpec(-4e11, 4e11, 401)
    )
    t_periods: float = 3.0
    t_samples_per_period: int = 1024
    guard: float = DEFAULT_GUARD
    steps: int = 4000
    out_dir: str = "out"

    def __post_init__(self) -> None:
        if (self.z_theta is None) == (self.z_cm is None):
            raise ConfigError("exactly one of z.theta / z.cm must be set")
        if self.guard < 0:
            raise ConfigError("guard must be non-negative")
        if self.steps < 1:
            raise ConfigError("steps must be >= 1")
        if self.t_periods <= 0 or self.t_samples_per_period < 1:
            raise ConfigError("time grid must be non-empty")
        try:
            self.ensemble()
            self.pump()
            self.state()
            self.probe()
        except (ValueError, DressedProbeError) as exc:
            raise ConfigError(f"invalid physical parameters: {exc}") from exc
        if self.pump().omega_p - self.delta_grid.stop <= 0:
            raise ConfigError("delta grid reaches non-positive probe omega")

    def ensemble(self) -> AtomEnsemble:
        if self.d_squared < 0:
            raise ConfigError("d_squared must be non-negative")
        return AtomEnsemble(
            omega0=self.omega0, d=math.sqrt(self.d_squared), rho=self.rho
        )

    def pump(self) -> PumpField:
        return PumpField.for_ensemble(
            self.ensemble(), detuning=self.detuning, rabi=self.rabi
        )

    def state(self) -> SuperpositionState:
        return SuperpositionState(alpha=self.alpha, beta=self.beta)

    def probe(self) -> ProbeField:
        return ProbeField(
            omega=self.pump().omega_p - self.probe_delta, a0=self.a0
        )

    def omega_prime(self) -> float:
        return generalized_rabi(self.detuning, self.rabi)

    def z_fixed(self) -> float:
        """Evaluation plane in cm (theta is the phase w' z / c)."""
        if self.z_cm is not None:
            return self.z_cm
        return self.z_theta * CGS.c / self.omega_prime()


def _as_complex(value, key: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(x, (int, float)) for x in value)
    ):
        return complex(value[0], value[1])
    raise ConfigError(f"{key} must be a number or a [re, im] pair")


def _number(section: dict, key: str, where: str) -> float:
    if key not in section:
        raise ConfigError(f"missing key {where}.{key}")
    value = section[key]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"{where}.{key} must be a number")
    return float(value)


def config_from_dict(raw: dict) -> RunConfig:
    """Build a RunConfig from parsed JSON, validating structure and values."""
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")

    def section(name: str) -> dict:
        value = raw.get(name, {})
        if not isinstance(value, dict):
            raise ConfigError(f"section {name} must be an object")
        return value

    defaults = RunConfig()
    ens = section("ensemble")
    pump = section("pump")
    state = section("state")
    probe = section("probe")
    zsec = section("z")
    grids = section("grids")

    kwargs = dict(
        omega0=(
            _number(ens, "omega0", "ensemble")
            if "omega0" in ens
            else defaults.omega0
        ),
        d_squared=(
            _number(ens, "d_squared", "ensemble")
            if "d_squared" in ens
            else defaults.d_squared
        ),
        rho=_number(ens, "rho", "ensemble") if "rho" in ens else defaults.rho,
        detuning=(
            _number(pump, "detuning", "pump")
            if "detuning" in pump
            else defaults.detuning
        ),
        rabi=_number(pump, "rabi", "pump") if "rabi" in pump else defaults.rabi,
        alpha=(
            _as_complex(state["alpha"], "state.alpha")
            if "alpha" in state
            else defaults.alpha
        ),
        beta=(
            _as_complex(state["beta"], "state.beta")
            if "beta" in state
            else defaults.beta
        ),
        probe_delta=(
            _number(probe, "delta", "probe")
            if "delta" in probe
            else defaults.probe_delta
        ),
        a0=_number(probe, "a0", "probe") if "a0" in probe else defaults.a0,
        guard=(
            _number(raw, "guard", "<root>")
            if "guard" in raw
            else defaults.guard
        ),
        steps=(
            int(_number(raw, "steps", "<root>"))
            if "steps" in raw
            else defaults.steps
        ),
        out_dir=raw.get("out_dir", defaults.out_dir),
    )

    if "theta" in zsec and "cm" in zsec:
        raise ConfigError("z must set exactly one of theta / cm")
    if "cm" in zsec:
        kwargs["z_theta"] = None
        kwargs["z_cm"] = _number(zsec, "cm", "z")
    elif "theta" in zsec:
        kwargs["z_theta"] = _number(zsec, "theta", "z")
        kwargs["z_cm"] = None

    if "delta" in grids:
        dg = grids["delta"]
        if not isinstance(dg, dict):
            raise ConfigError("grids.delta must be an object")
        kwargs["delta_grid"] = GridSpec(
            start=_number(dg, "start", "grids.delta"),
            stop=_number(dg, "stop", "grids.delta"),
            count=int(_number(dg, "count", "grids.delta")),
        )
    if "t" in grids:
        tg = grids["t"]
        if not isinstance(tg, dict):
            raise ConfigError("grids.t must be an object")
        if "periods" in tg:
            kwargs["t_periods"] = _number(tg, "periods", "grids.t")
        if "samples_per_period" in tg:
            kwargs["t_samples_per_period"] = int(
                _number(tg, "samples_per_period", "grids.t")
            )

    if not isinstance(kwargs["out_dir"], str):
        raise ConfigError("out_dir must be a string")
    return RunConfig(**kwargs)


def load_config(path: str | Path) -> RunConfig:
    """Load and validate a JSON run configuration."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(raw)


def config_to_dict(config: RunConfig) -> dict:
    """Round-trippable JSON form of a configuration."""

    def pair(value: complex):
        if value.imag == 0.0:
            return value.real
        return [value.real, value.imag]

    out: dict = {
        "ensemble": {
            "omega0": config.omega0,
            "d_squared": config.d_squared,
            "rho": config.rho,
        },
        "pump": {"detuning": config.detuning, "rabi": config.rabi},
        "state": {"alpha": pair(config.alpha), "beta": pair(config.beta)},
        "probe": {"delta": config.probe_delta, "a0": config.a0},
        "z": (
            {"theta": config.z_theta}
            if config.z_theta is not None
            else {"cm": config.z_cm}
        ),
        "grids": {
            "delta": asdict(config.delta_grid),
            "t": {
                "periods": config.t_periods,
                "samples_per_period": config.t_samples_per_period,
            },
        },
        "guard": config.guard,
        "steps": config.steps,
        "out_dir": config.out_dir,
    }
    return out
