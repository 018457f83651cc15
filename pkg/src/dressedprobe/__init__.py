"""Probe-wave pulse trains in a gas of pump-dressed two-level atoms.

A monochromatic probe entering a gas prepared in a superposition of two
pump-dressed internal states picks up red- and blue-sideband components
offset by the generalized Rabi frequency.  The beat turns the probe into a
periodic train of pulses whose repetition period is set by that frequency
alone, while depth and width follow from the gas density and resonance
brackets.  This package evaluates the closed-form envelope, the dressed
refractive index including the beyond-dipole term, pulse-train statistics,
and an independent characteristic-integration oracle for the reduced wave
equation.

Units are Gaussian-CGS; every frequency is angular (rad/s).
"""

from .characteristics import (
    RweCoefficients,
    closed_form_log_amplitude,
    derive_coefficients,
    integrate_characteristic,
    log_amplitude_grid,
    residual_check,
)
from .config import GridSpec, RunConfig, config_from_dict, load_config
from .constants import CGS, DEFAULT_GUARD, PhysicalConstants
from .dispersion import DispersionResult, beyond_dipole_fraction, refractive_index
from .dressed import (
    AtomEnsemble,
    DressedParams,
    ProbeField,
    PumpField,
    SuperpositionState,
    generalized_rabi,
    normalization_coeffs,
    stark_shifts,
)
from .errors import (
    CausalityViolation,
    ConfigError,
    DegenerateDressing,
    DressedProbeError,
    GridTooCoarse,
    NonCommensurate,
    ResonancePole,
    ShallowModulation,
    StepTooCoarse,
    UnderSampled,
    ZeroDipole,
    ZeroRabi,
)
from .modulation import (
    FieldSample,
    ModulationExponent,
    SidebandBrackets,
    exponent,
    exponent_grid,
    field_sample,
    k_scale,
    modulation_depth,
    sideband_brackets,
)
from .pulsetrain import (
    PulseTrainStats,
    TimeSeries,
    analyze_train,
    fwhm_closed_form,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AtomEnsemble",
    "CGS",
    "CausalityViolation",
    "ConfigError",
    "DEFAULT_GUARD",
    "DegenerateDressing",
    "DispersionResult",
    "DressedParams",
    "DressedProbeError",
    "FieldSample",
    "GridSpec",
    "GridTooCoarse",
    "ModulationExponent",
    "NonCommensurate",
    "PhysicalConstants",
    "ProbeField",
    "PulseTrainStats",
    "PumpField",
    "ResonancePole",
    "RunConfig",
    "RweCoefficients",
    "ShallowModulation",
    "SidebandBrackets",
    "StepTooCoarse",
    "SuperpositionState",
    "TimeSeries",
    "UnderSampled",
    "ZeroDipole",
    "ZeroRabi",
    "analyze_train",
    "beyond_dipole_fraction",
    "closed_form_log_amplitude",
    "config_from_dict",
    "derive_coefficients",
    "exponent",
    "exponent_grid",
    "field_sample",
    "fwhm_closed_form",
    "generalized_rabi",
    "integrate_characteristic",
    "k_scale",
    "load_config",
    "log_amplitude_grid",
    "modulation_depth",
    "normalization_coeffs",
    "refractive_index",
    "residual_check",
    "sideband_brackets",
    "spectrum",
    "stark_shifts",
]
