"""Two-level atoms dressed by a strong monochromatic pump.

A far off-resonance pump mixes the bare ground and excited states into two
dressed eigenstates.  Everything downstream (refractive index, sideband
modulation, the pulse train) is parametrized by three quantities derived
here: the generalized Rabi frequency ``sqrt(detuning^2 + rabi^2)``, the
light-shifted level positions, and the admixture (normalization)
coefficients of the dressed pair.

Conventions: Gaussian-CGS units throughout, and every frequency-like
quantity is an *angular* frequency in rad/s.  The detuning is pump
frequency minus transition frequency and may take either sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, DegenerateDressing, ZeroRabi


def generalized_rabi(detuning: float, rabi: float) -> float:
    """Splitting frequency sqrt(detuning^2 + rabi^2) of the dressed pair.

    This single frequency sets the sideband offsets and all modulation
    periods of the probe field.

    Parameters
    ----------
    detuning : float
        Pump minus transition angular frequency, rad/s.
    rabi : float
        Pump Rabi frequency, rad/s, non-negative.

    Returns
    -------
    float
        Strictly positive generalized Rabi frequency, rad/s.

    Raises
    ------
    DegenerateDressing
        If detuning and Rabi frequency are both zero.
    """
    if rabi < 0:
        raise ValueError("rabi must be non-negative")
    if detuning == 0.0 and rabi == 0.0:
        raise DegenerateDressing(
            "detuning and Rabi frequency cannot both vanish"
        )
    return math.hypot(detuning, rabi)


def _split_offsets(detuning: float, rabi: float) -> tuple[float, float]:
    """Return (omega_prime - detuning, omega_prime + detuning) stably.

    One of the two offsets suffers catastrophic cancellation when
    rabi << |detuning|; it is recovered from the exact identity
    (omega_prime - detuning)(omega_prime + detuning) = rabi^2.
    """
    omega_prime = generalized_rabi(detuning, rabi)
    if detuning >= 0.0:
        plus = omega_prime + detuning
        minus = (rabi * rabi) / plus
    else:
        minus = omega_prime - detuning
        plus = (rabi * rabi) / minus
    return minus, plus


def stark_shifts(detuning: float, rabi: float) -> tuple[float, float]:
    """Light-shifted positions of the two dressed levels.

    Returns ``(-detuning/2 + omega_prime/2, -detuning/2 - omega_prime/2)``,
    ordered so the first element is always the larger shift.
    """
    minus, plus = _split_offsets(detuning, rabi)
    return 0.5 * minus, -0.5 * plus


def normalization_coeffs(detuning: float, rabi: float) -> tuple[float, float]:
    """Admixture coefficients of the two dressed states.

    Each coefficient is ``rabi / sqrt(2 w' (w' -+ detuning))`` with
    ``w'`` the generalized Rabi frequency, normalized so that each dressed
    state has unit norm.  At zero detuning both equal ``1/sqrt(2)``.

    Raises
    ------
    ZeroRabi
        If the pump is off; the admixture formula is undefined at rabi = 0.
    """
    if rabi < 0:
        raise ValueError("rabi must be non-negative")
    if rabi == 0.0:
        raise ZeroRabi("admixture coefficients are undefined for a dark pump")
    omega_prime = generalized_rabi(detuning, rabi)
    minus, plus = _split_offsets(detuning, rabi)
    n_plus = rabi / math.sqrt(2.0 * omega_prime * minus)
    n_minus = rabi / math.sqrt(2.0 * omega_prime * plus)
    return n_plus, n_minus


@dataclass(frozen=True)
class AtomEnsemble:
    """Gas of identical two-level atoms.

    Attributes
    ----------
    omega0 : float
        Transition angular frequency, rad/s.
    d : float
        Dipole matrix element, esu*cm (non-negative).
    rho : float
        Number density, cm^-3.
    """

    omega0: float
    d: float
    rho: float

    def __post_init__(self) -> None:
        if self.omega0 <= 0:
            raise ValueError("omega0 must be strictly positive")
        if self.d < 0:
            raise ValueError("dipole matrix element must be non-negative")
        if self.rho < 0:
            raise ValueError("number density must be non-negative")

    @property
    def d_squared(self) -> float:
        return self.d * self.d


@dataclass(frozen=True)
class PumpField:
    """Strong monochromatic pump dressing the gas.

    The detuning is stored explicitly so the dressed algebra never has to
    subtract two nearly equal optical frequencies.
    """

    omega_p: float
    rabi: float
    detuning: float

    def __post_init__(self) -> None:
        if self.omega_p <= 0:
            raise ValueError("omega_p must be strictly positive")
        # Raises DegenerateDressing when both vanish.
        generalized_rabi(self.detuning, self.rabi)

    @classmethod
    def for_ensemble(
        cls, ensemble: AtomEnsemble, *, detuning: float, rabi: float
    ) -> "PumpField":
        """Build a pump locked to an ensemble: omega_p = omega0 + detuning."""
        return cls(
            omega_p=ensemble.omega0 + detuning, rabi=rabi, detuning=detuning
        )

    def require_match(self, ensemble: AtomEnsemble) -> None:
        """Check detuning consistency against an ensemble's transition."""
        expected = ensemble.omega0 + self.detuning
        if abs(self.omega_p - expected) > 1e-9 * ensemble.omega0:
            raise ConfigError(
                f"pump omega_p = {self.omega_p!r} does not equal "
                f"omega0 + detuning = {expected!r}"
            )

    @property
    def omega_prime(self) -> float:
        return generalized_rabi(self.detuning, self.rabi)

    def dressed(self) -> "DressedParams":
        return DressedParams.from_pump(self)


@dataclass(frozen=True)
class DressedParams:
    """Derived dressed-state parameters of a pump field."""

    omega_prime: float
    lambda_plus: float
    lambda_minus: float
    n_plus: float
    n_minus: float

    @classmethod
    def from_pump(cls, pump: PumpField) -> "DressedParams":
        lam_plus, lam_minus = stark_shifts(pump.detuning, pump.rabi)
        n_plus, n_minus = normalization_coeffs(pump.detuning, pump.rabi)
        return cls(
            omega_prime=generalized_rabi(pump.detuning, pump.rabi),
            lambda_plus=lam_plus,
            lambda_minus=lam_minus,
            n_plus=n_plus,
            n_minus=n_minus,
        )


@dataclass(frozen=True)
class SuperpositionState:
    """Complex amplitudes of the prepared dressed-state superposition."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        alpha = complex(self.alpha)
        beta = complex(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        norm = abs(alpha) ** 2 + abs(beta) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(
                f"|alpha|^2 + |beta|^2 = {norm!r} must equal 1 within 1e-12"
            )

    @property
    def population_difference(self) -> float:
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2


@dataclass(frozen=True)
class ProbeField:
    """Weak monochromatic probe entering the dressed gas.

    The propagation problem only involves the coordinate along the probe
    direction, so the direction vector is kept purely for bookkeeping.
    """

    omega: float
    a0: float = 1.0
    direction: tuple[float, float, float] = (0.0, 0.0, 1.0)

    def __post_init__(self) -> None:
        if self.omega <= 0:
            raise ValueError("probe omega must be strictly positive")
        norm = math.sqrt(sum(x * x for x in self.direction))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"direction norm {norm!r} must be 1 within 1e-12")
