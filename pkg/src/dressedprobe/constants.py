"""Gaussian-CGS constants shared by every formula in the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in Gaussian-CGS units.

    Attributes
    ----------
    c : float
        Speed of light, cm/s.
    hbar : float
        Reduced Planck constant, erg*s.
    e : float
        Elementary charge, esu.
    m : float
        Electron mass, g.
    """

    c: float = 2.99792458e10
    hbar: float = 1.054571817e-27
    e: float = 4.80320471257e-10
    m: float = 9.1093837015e-28

    def __post_init__(self) -> None:
        for name in ("c", "hbar", "e", "m"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")


#: Shared constants instance; every module evaluates formulas against this.
CGS = PhysicalConstants()

#: Default half-width (rad/s) of the exclusion band around resonance poles.
#: The model is lossless, so denominators are left unregularized and
#: evaluation inside the band is refused instead.
DEFAULT_GUARD = 1e6
