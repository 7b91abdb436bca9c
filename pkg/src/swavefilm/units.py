"""Physical parameters and their reduction to dimensionless form.

All dimensional input (CGS: s^-1, cm/s, nm) is converted here; the rest of the
package works with the dimensionless frequency ``Omega = omega / omega_p``,
the reduced thickness ``W`` and the velocity ratio ``v_F / c``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError

#: Speed of light in vacuum, cm/s.
SPEED_OF_LIGHT = 2.99792458e10

_NM_TO_CM = 1e-7


@dataclass(frozen=True)
class PhysicalConstants:
    c: float = SPEED_OF_LIGHT


@dataclass(frozen=True)
class MetalParameters:
    """Electron-gas parameters of the film metal.

    Parameters
    ----------
    omega_p : float
        Angular plasma frequency, rad/s.
    v_f : float
        Fermi velocity, cm/s.
    eps_coll : float
        Collision frequency in units of the plasma frequency, ``nu / omega_p``.
    """

    omega_p: float
    v_f: float
    eps_coll: float = 0.001

    def __post_init__(self):
        if not self.omega_p > 0:
            raise DomainError(f"omega_p must be positive, got {self.omega_p!r}")
        if not self.v_f > 0:
            raise DomainError(f"v_f must be positive, got {self.v_f!r}")
        if not self.v_f < SPEED_OF_LIGHT:
            raise DomainError(f"v_f must be below the speed of light, got {self.v_f!r}")
        if not self.eps_coll >= 0:
            raise DomainError(f"eps_coll must be non-negative, got {self.eps_coll!r}")

    @property
    def velocity_ratio(self) -> float:
        """``v_F / c``."""
        return self.v_f / SPEED_OF_LIGHT

    def scaled(self, vf_scale: float) -> MetalParameters:
        """Copy with the Fermi velocity multiplied by ``vf_scale``."""
        return replace(self, v_f=self.v_f * vf_scale)


@dataclass(frozen=True)
class StackConfiguration:
    """Film of thickness ``d_nm`` between two transparent dielectrics."""

    eps1: float
    eps2: float
    d_nm: float

    def __post_init__(self):
        for name in ("eps1", "eps2", "d_nm"):
            value = getattr(self, name)
            if isinstance(value, complex):
                raise DomainError(f"{name} must be real, got {value!r}")
            if not value > 0:
                raise DomainError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class IncidentWave:
    """Dimensionless frequency ``omega_ratio`` and incidence angle ``theta`` in radians."""

    omega_ratio: float
    theta: float = 0.0

    def __post_init__(self):
        if not self.omega_ratio > 0:
            raise DomainError(f"omega_ratio must be positive, got {self.omega_ratio!r}")
        if not 0 <= self.theta < math.pi / 2:
            raise DomainError(f"theta must lie in [0, pi/2), got {self.theta!r}")

    @classmethod
    def from_degrees(cls, omega_ratio: float, theta_deg: float = 0.0) -> IncidentWave:
        return cls(omega_ratio, math.radians(theta_deg))


#: Sodium: omega_p = 6.5e15 s^-1, v_F = 8.52e7 cm/s.
SODIUM = MetalParameters(omega_p=6.5e15, v_f=8.52e7, eps_coll=0.001)

METAL_PRESETS = {"sodium": SODIUM}

#: Substrate permittivities usable as ``eps2`` shortcuts.
SUBSTRATE_PRESETS = {"glass": 4.0, "mica": 8.0, "ceramic": 40.0}


def reduced_thickness(metal: MetalParameters, d_nm: float) -> float:
    """Film thickness in units of ``c / omega_p``.

    ``W = omega_p * d * 1e-7 / c`` with ``d`` in nanometers.
    """
    if not d_nm > 0:
        raise DomainError(f"film thickness must be positive, got {d_nm!r} nm")
    return metal.omega_p * d_nm * _NM_TO_CM / SPEED_OF_LIGHT


def relative_permittivity_ratio(stack: StackConfiguration) -> float:
    """``eps2 / eps1``."""
    if not stack.eps1 > 0:
        raise DomainError(f"eps1 must be positive, got {stack.eps1!r}")
    return stack.eps2 / stack.eps1
