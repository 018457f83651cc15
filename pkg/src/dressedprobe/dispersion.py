"""Ordinary refractive index of the dressed gas for a weak probe.

The index consists of two sideband-resonant terms.  Each term carries a
dipole contribution scaling with d^2 omega0^2 and a second contribution
(e^2/m)(rabi^2/omega_prime) that survives beyond the dipole approximation
of the probe coupling.  The whole correction to n = 1 is proportional to
the dressed-state population difference, so a balanced superposition or an
empty cell leaves the probe undispersed.

The model is lossless: the index is purely real and diverges at the two
sideband resonances.  Evaluation inside a configurable guard band around
those poles is refused rather than regularized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CGS, DEFAULT_GUARD
from .dressed import (
    AtomEnsemble,
    PumpField,
    SuperpositionState,
    _split_offsets,
    generalized_rabi,
)
from .errors import ResonancePole, ZeroDipole


@dataclass(frozen=True)
class DispersionResult:
    """Refractive index split into its two physical contributions.

    ``n0 - 1 == dipole_part + beyond_dipole_part`` exactly; the split lets
    the non-saturating beyond-dipole term be explored parametrically.
    """

    n0: float
    dipole_part: float
    beyond_dipole_part: float


def _guard_sideband_denominators(
    delta_po: float, omega_prime: float, guard: float
) -> tuple[float, float]:
    """Return the two sideband denominators, refusing the guard band."""
    den_plus = delta_po + omega_prime
    den_minus = delta_po - omega_prime
    if not abs(den_plus) > guard:
        raise ResonancePole("omega_p - omega + omega_prime", den_plus, guard)
    if not abs(den_minus) > guard:
        raise ResonancePole("omega_p - omega - omega_prime", den_minus, guard)
    return den_plus, den_minus


def refractive_index(
    ensemble: AtomEnsemble,
    pump: PumpField,
    state: SuperpositionState,
    probe_omega: float,
    guard: float = DEFAULT_GUARD,
) -> DispersionResult:
    """Evaluate the probe refractive index n0(omega).

    Parameters
    ----------
    probe_omega : float
        Probe angular frequency, rad/s.
    guard : float
        Half-width of the refused band around each sideband pole, rad/s.

    Raises
    ------
    ResonancePole
        If a sideband denominator lies within the guard band; the message
        names the offending denominator.
    """
    if probe_omega <= 0:
        raise ValueError("probe_omega must be strictly positive")
    pump.require_match(ensemble)
    omega_prime = generalized_rabi(pump.detuning, pump.rabi)
    minus, plus = _split_offsets(pump.detuning, pump.rabi)
    delta_po = pump.omega_p - probe_omega
    den_plus, den_minus = _guard_sideband_denominators(
        delta_po, omega_prime, guard
    )

    d2w2 = ensemble.d_squared * ensemble.omega0**2
    dip_plus = d2w2 * minus * minus / (CGS.hbar * omega_prime**2)
    dip_minus = d2w2 * plus * plus / (CGS.hbar * omega_prime**2)
    beyond = (CGS.e**2 / CGS.m) * pump.rabi**2 / omega_prime

    prefactor = (
        math.pi
        * ensemble.rho
        / (2.0 * probe_omega**2)
        * state.population_difference
    )
    dipole_part = prefactor * (dip_plus / den_plus - dip_minus / den_minus)
    beyond_part = prefactor * beyond * (1.0 / den_plus - 1.0 / den_minus)
    return DispersionResult(
        n0=1.0 + dipole_part + beyond_part,
        dipole_part=dipole_part,
        beyond_dipole_part=beyond_part,
    )


def beyond_dipole_fraction(ensemble: AtomEnsemble, pump: PumpField) -> float:
    """Ratio of the beyond-dipole to the dipole numerator.

    Quotes the red-sideband bracket: (e^2/m)(rabi^2/omega_prime) divided by
    d^2 omega0^2 (omega_prime - detuning)^2 / (hbar omega_prime^2).  The
    ratio grows without bound in the pump Rabi frequency for red detuning,
    which is the non-saturating signature of the beyond-dipole coupling.

    Raises
    ------
    ZeroDipole
        If the ensemble has no dipole moment to compare against.
    """
    if ensemble.d == 0:
        raise ZeroDipole("dipole matrix element is zero")
    if pump.rabi == 0:
        return 0.0
    omega_prime = generalized_rabi(pump.detuning, pump.rabi)
    minus, _ = _split_offsets(pump.detuning, pump.rabi)
    numerator = (CGS.e**2 / CGS.m) * pump.rabi**2 / omega_prime
    denominator = (
        ensemble.d_squared
        * ensemble.omega0**2
        * minus
        * minus
        / (CGS.hbar * omega_prime**2)
    )
    return numerator / denominator
