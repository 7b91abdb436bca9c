"""Classical local-permittivity slab, for validating the kinetic pipeline.

The film is a homogeneous layer with Drude permittivity
``1 - 1 / (Omega (Omega + i eps))`` and the s-polarized Airy formulas are
applied directly.  Nothing here goes through the mode sums, so agreement in
the ``v_F -> 0`` limit is an independent check of the impedance route.
"""
from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

from .errors import DegenerateConfigurationError
from .optics import OpticalCoefficients
from .units import IncidentWave, MetalParameters, StackConfiguration, reduced_thickness


def _normal_wavenumber(eps: complex, transverse_sq: float) -> complex:
    """``sqrt(eps - transverse_sq)`` on the branch with Im >= 0 (decaying into +x).

    A real non-negative radicand gives the non-negative real root.
    """
    radicand = complex(eps) - transverse_sq
    if abs(radicand) <= 4 * sys.float_info.epsilon * max(abs(eps), transverse_sq):
        return 0j
    k = cmath.sqrt(radicand)
    if k.imag < 0 or (k.imag == 0 and k.real < 0):
        k = -k
    return k


@dataclass(frozen=True)
class SlabModel:
    eps_film: complex
    eps1: float
    eps2: float
    phase_thickness: complex

    @classmethod
    def drude(cls, metal: MetalParameters, stack: StackConfiguration, wave: IncidentWave):
        omega = wave.omega_ratio
        eps_film = 1 - 1 / (omega * complex(omega, metal.eps_coll))
        transverse_sq = stack.eps1 * math.sin(wave.theta) ** 2
        k_film = _normal_wavenumber(eps_film, transverse_sq)
        W = reduced_thickness(metal, stack.d_nm)
        return cls(eps_film, stack.eps1, stack.eps2, omega * W * k_film)

    def coefficients(self, theta: float) -> OpticalCoefficients:
        transverse_sq = self.eps1 * math.sin(theta) ** 2
        k1 = complex(math.sqrt(self.eps1) * math.cos(theta), 0.0)
        kf = _normal_wavenumber(self.eps_film, transverse_sq)
        k2 = _normal_wavenumber(self.eps2, transverse_sq)

        r1f = (k1 - kf) / (k1 + kf)
        rf2 = (kf - k2) / (kf + k2)
        t1f = 2 * k1 / (k1 + kf)
        tf2 = 2 * kf / (kf + k2)
        phase = cmath.exp(1j * self.phase_thickness)
        den = 1 + r1f * rf2 * phase * phase
        if den == 0:
            raise DegenerateConfigurationError("vanishing slab denominator")
        r = (r1f + rf2 * phase * phase) / den
        t = t1f * tf2 * phase / den
        big_r = abs(r) ** 2
        big_t = (k2.real / k1.real) * abs(t) ** 2
        return OpticalCoefficients.from_tr(big_t, big_r)


def fresnel_slab(
    metal: MetalParameters, stack: StackConfiguration, wave: IncidentWave
) -> OpticalCoefficients:
    """T, R, A of a local Drude slab of the same metal and thickness."""
    return SlabModel.drude(metal, stack, wave).coefficients(wave.theta)
