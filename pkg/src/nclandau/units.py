"""Physical constants and the derived magnetic scales.

Everything downstream works in whatever unit system the constants are
supplied in; the engine never converts between systems. The default is
the dimensionless choice e = B = c = hbar = m = 1, in which both the
magnetic length and the cyclotron frequency equal one and all commutator
results are pure numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PhysicalUnits",
    "NATURAL",
    "magnetic_length",
    "cyclotron_frequency",
    "level_spacing",
]


@dataclass(frozen=True)
class PhysicalUnits:
    """Charge, field strength, speed of light, hbar and mass.

    All five constants must be strictly positive and mutually consistent
    (same unit system); nothing else is assumed about them.
    """

    e: float = 1.0
    B: float = 1.0
    c: float = 1.0
    hbar: float = 1.0
    m: float = 1.0

    def __post_init__(self) -> None:
        for name in ("e", "B", "c", "hbar", "m"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"constant {name} must be a positive finite number, got {value!r}")


NATURAL = PhysicalUnits()


def magnetic_length(units: PhysicalUnits) -> float:
    """Length scale ell = sqrt(hbar c / (e B)) of the planar problem.

    ell**2 is the magnitude of the coordinate commutator picked up on the
    lowest retained level.
    """
    return math.sqrt(units.hbar * units.c / (units.e * units.B))


def cyclotron_frequency(units: PhysicalUnits) -> float:
    """Angular frequency omega = e B / (m c) of the circular orbits."""
    return units.e * units.B / (units.m * units.c)


def level_spacing(units: PhysicalUnits) -> float:
    """Energy gap hbar*omega between adjacent oscillator levels."""
    return units.hbar * cyclotron_frequency(units)
