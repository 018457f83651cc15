"""Sideband modulation of the probe envelope.

The probe envelope acquires a multiplicative prefactor exp(G(z, t)).  The
complex exponent is a two-term harmonic in the generalized Rabi frequency,

    G(z, t) = c1(z) exp(+i w' t) + c2(z) exp(-i w' t),

with z-dependent coefficients that vanish at the entry face:

    c1(z) = +K conj(alpha) beta  (1 - exp(-i w' z / c)) b1,
    c2(z) = -K alpha conj(beta) (1 - exp(+i w' z / c)) b2,

where K = 2 pi rho d^2 omega0^2 rabi / (hbar omega w'^3) and b1, b2 are the
red- and blue-sideband resonance brackets.  Re G is a zero-mean sinusoid in
time whose amplitude (the modulation depth) controls pulse contrast; Im G
is pure phase modulation.  The exponent is proportional to the coherence
alpha * beta, so a gas prepared in a single dressed state is not modulated
at all.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .constants import CGS, DEFAULT_GUARD
from .dispersion import _guard_sideband_denominators, refractive_index
from .dressed import (
    AtomEnsemble,
    ProbeField,
    PumpField,
    SuperpositionState,
    _split_offsets,
    generalized_rabi,
)
from .errors import CausalityViolation, ResonancePole


@dataclass(frozen=True)
class SidebandBrackets:
    """Resonance factors of the red (b1) and blue (b2) sideband terms."""

    b1: float
    b2: float


@dataclass(frozen=True)
class ModulationExponent:
    """Complex exponent G(z, t) together with its analysis quantities.

    Attributes
    ----------
    g : complex
        Exponent value; the envelope prefactor is exp(g).
    k_scale : float
        Dimensionless strength K multiplying both sideband terms.
    depth : float
        Amplitude R(z) of the zero-mean sinusoid Re G(z, t) at this z.
    """

    g: complex
    k_scale: float
    depth: float


@dataclass(frozen=True)
class FieldSample:
    """Probe field evaluated at one (z, t) point behind the wavefront."""

    z: float
    t: float
    amplitude: complex
    intensity_gain: float
    phase: float


def sideband_brackets(
    pump: PumpField,
    probe_omega: float,
    omega_prime: float,
    guard: float = DEFAULT_GUARD,
) -> SidebandBrackets:
    """Evaluate the red- and blue-sideband resonance brackets.

    b1 = (w'+detuning)/(wp-w) + (w'-detuning)/(wp-w+w'),
    b2 = (w'-detuning)/(wp-w) + (w'+detuning)/(wp-w-w').

    The three denominators mark Rayleigh scattering, one-photon
    absorption/emission and the stimulated hypercombination resonance;
    values inside the guard band raise ResonancePole naming the culprit.
    """
    delta_po = pump.omega_p - probe_omega
    if not abs(delta_po) > guard:
        raise ResonancePole("omega_p - omega", delta_po, guard)
    den_plus, den_minus = _guard_sideband_denominators(
        delta_po, omega_prime, guard
    )
    minus, plus = _split_offsets(pump.detuning, pump.rabi)
    b1 = plus / delta_po + minus / den_plus
    b2 = minus / delta_po + plus / den_minus
    return SidebandBrackets(b1=b1, b2=b2)


def k_scale(
    ensemble: AtomEnsemble, pump: PumpField, probe_omega: float
) -> float:
    """Dimensionless exponent scale K = 2 pi rho d^2 w0^2 rabi/(hbar w w'^3)."""
    omega_prime = generalized_rabi(pump.detuning, pump.rabi)
    return (
        2.0
        * math.pi
        * ensemble.rho
        * ensemble.d_squared
        * ensemble.omega0**2
        * pump.rabi
        / (CGS.hbar * probe_omega * omega_prime**3)
    )


def _harmonic_coefficients(
    ensemble: AtomEnsemble,
    pump: PumpField,
    state: SuperpositionState,
    probe_omega: float,
    z: float,
    guard: float,
) -> tuple[complex, complex, float]:
    """Coefficients (c1, c2) of exp(+-i w' t) in G at coordinate z, plus K."""
    pump.require_match(ensemble)
    omega_prime = generalized_rabi(pump.detuning, pump.rabi)
    brackets = sideband_brackets(pump, probe_omega, omega_prime, guard)
    scale = k_scale(ensemble, pump, probe_omega)
    theta = omega_prime * z / CGS.c
    ramp_red = 1.0 - cmath.exp(-1j * theta)
    ramp_blue = 1.0 - cmath.exp(1j * theta)
    c1 = scale * state.alpha.conjugate() * state.beta * ramp_red * brackets.b1
    c2 = -scale * state.alpha * state.beta.conjugate() * ramp_blue * brackets.b2
    return c1, c2, scale


def exponent(
    ensemble: AtomEnsemble,
    pump: PumpField,
    state: SuperpositionState,
    probe: ProbeField,
    z: float,
    t: float,
    guard: float = DEFAULT_GUARD,
) -> ModulationExponent:
    """Evaluate the complex envelope exponent G(z, t).

    G vanishes identically at the entry face z = 0 and whenever either
    superposition amplitude is zero, and flips sign under a half-period
    shift t -> t + pi/w'.
    """
    if z < 0:
        raise ValueError("z must be non-negative")
    c1, c2, scale = _harmonic_coefficients(
        ensemble, pump, state, probe.omega, z, guard
    )
    omega_prime = generalized_rabi(pump.detuning, pump.rabi)
    w = cmath.exp(1j * omega_prime * t)
    g = c1 * w + c2 * w.conjugate()
    depth = abs(c1 + c2.conjugate())
    return ModulationExponent(g=g, k_scale=scale, depth=depth)


def modulation_depth(
    ensemble: AtomEnsemble,
    pump: PumpField,
    state: SuperpositionState,
    probe: ProbeField,
    z: float,
    guard: float = DEFAULT_GUARD,
) -> float:
    """Amplitude R(z) of the sinusoid Re G(z, t) = R cos(w' t + psi).

    R controls the intensity contrast exp(+-2R) of the pulse train and is
    periodic in z with the spatial modulation period 2 pi c / w'.
    """
    if z < 0:
        raise ValueError("z must be non-negative")
    c1, c2, _ = _harmonic_coefficients(
        ensemble, pump, state, probe.omega, z, guard
    )
    return abs(c1 + c2.conjugate())


def field_sample(
    ensemble: AtomEnsemble,
    pump: PumpField,
    state: SuperpositionState,
    probe: ProbeField,
    z: float,
    t: float,
    guard: float = DEFAULT_GUARD,
) -> FieldSample:
    """Sample the probe envelope at (z, t), z in cm along the probe.

    The solution is only valid behind the wavefront, t >= z/c.  The
    returned phase is the slowly varying one: Im G plus the dispersive
    advance omega (n0 - 1) z / c.

    Raises
    ------
    CausalityViolation
        If the sample point is ahead of the wavefront.
    """
    wavefront = z / CGS.c
    slack = 1e-12 * max(abs(t), wavefront)
    if t + slack < wavefront:
        raise CausalityViolation(
            f"t = {t!r} s is ahead of the wavefront z/c = {wavefront!r} s"
        )
    mod = exponent(ensemble, pump, state, probe, z, t, guard)
    disp = refractive_index(ensemble, pump, state, probe.omega, guard)
    try:
        amplitude = probe.a0 * cmath.exp(mod.g)
    except OverflowError:
        amplitude = probe.a0 * cmath.rect(math.inf, mod.g.imag)
    try:
        gain = math.exp(2.0 * mod.g.real)
    except OverflowError:
        gain = math.inf
    phase = mod.g.imag + probe.omega * (disp.n0 - 1.0) * z / CGS.c
    return FieldSample(
        z=z, t=t, amplitude=amplitude, intensity_gain=gain, phase=phase
    )


def exponent_grid(
    ensemble: AtomEnsemble,
    pump: PumpField,
    state: SuperpositionState,
    probe_omega: float,
    z: np.ndarray,
    t: np.ndarray,
    guard: float = DEFAULT_GUARD,
) -> np.ndarray:
    """Vectorized G over the outer product of z and t grids.

    Returns a complex array of shape (len(z), len(t)).  Grid scans factor
    through the same coefficients as the scalar path, so rows/columns can
    be evaluated in one shot for sweeps and residual checks.
    """
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(z < 0):
        raise ValueError("z must be non-negative")
    pump.require_match(ensemble)
    omega_prime = generalized_rabi(pump.detuning, pump.rabi)
    brackets = sideband_brackets(pump, probe_omega, omega_prime, guard)
    scale = k_scale(ensemble, pump, probe_omega)
    theta = omega_prime * z / CGS.c
    ramp_red = (1.0 - np.exp(-1j * theta))[:, None]
    ramp_blue = (1.0 - np.exp(1j * theta))[:, None]
    wt = np.exp(1j * omega_prime * t)[None, :]
    a1 = scale * state.alpha.conjugate() * state.beta * brackets.b1
    a2 = scale * state.alpha * state.beta.conjugate() * brackets.b2
    return a1 * ramp_red * wt - a2 * ramp_blue * np.conj(wt)
