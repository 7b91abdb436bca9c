"""Reflectance, transmittance and absorptance of the S-wave.

The film enters only through the amplitude factors

    p_j = (sqrt(eps1) cos(theta) Z_j - 1) / (sqrt(eps1) cos(theta) Z_j + 1),

from which, with ``s = sqrt(eps2/eps1 - sin^2 theta)`` and ``pbar = (p1 + p2)/2``,

    R = |(s (pbar + p1 p2) + cos(theta) (pbar - p1 p2)) / D|^2
    T = cos(theta) Re(s) |p2 - p1|^2 / |D|^2
    D = s (1 + pbar) + cos(theta) (1 - pbar)
    A = 1 - T - R.
"""
from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

from .errors import DegenerateConfigurationError, DomainError, PoleError
from .impedance import ImpedancePair, SeriesControl, impedances
from .units import IncidentWave, MetalParameters, StackConfiguration, relative_permittivity_ratio

_ROUNDING_ULPS = 4


@dataclass(frozen=True)
class AmplitudePair:
    p1: complex
    p2: complex
    p_bar: complex

    @classmethod
    def of(cls, p1: complex, p2: complex) -> AmplitudePair:
        return cls(p1, p2, (p1 + p2) / 2)


@dataclass(frozen=True)
class OpticalCoefficients:
    transmittance: float
    reflectance: float
    absorptance: float
    energy_residual: float = 0.0

    @classmethod
    def from_tr(cls, t: float, r: float) -> OpticalCoefficients:
        a = absorptance(t, r)
        return cls(t, r, a, abs(1 - t - r - a))


def exit_wavenumber(eps12: float, theta: float) -> complex:
    """Normalized normal wavenumber ``sqrt(eps12 - sin^2 theta)`` in the exit medium.

    Real and non-negative for a propagating wave, ``+i sqrt(|.|)`` for an
    evanescent one (total internal reflection).
    """
    sin_sq = math.sin(theta) ** 2
    radicand = eps12 - sin_sq
    # sin^2 of a critical angle given in degrees is off by a few ulp
    if abs(radicand) <= _ROUNDING_ULPS * sys.float_info.epsilon * max(eps12, sin_sq):
        return 0j
    if radicand >= 0:
        return complex(math.sqrt(radicand), 0.0)
    return complex(0.0, math.sqrt(-radicand))


def amplitude_factors(z: ImpedancePair, eps1: float, theta: float) -> AmplitudePair:
    """Amplitudes ``p1``, ``p2`` of the reflected wave in the two symmetry cases."""
    cos_t = math.cos(theta)
    if not cos_t > 0:
        raise DomainError(f"cos(theta) must be positive, got theta={theta!r}")
    g = math.sqrt(eps1) * cos_t

    def p(zj):
        if cmath.isinf(zj):
            return 1 + 0j
        x = g * zj
        if x == -1:
            raise PoleError(f"sqrt(eps1) cos(theta) Z = -1 for Z={zj!r}")
        return (x - 1) / (x + 1)

    return AmplitudePair.of(p(z.z1), p(z.z2))


def _denominator(p: AmplitudePair, s: complex, cos_t: float) -> complex:
    den = s * (1 + p.p_bar) + cos_t * (1 - p.p_bar)
    if den == 0:
        raise DegenerateConfigurationError(
            f"vanishing denominator for p1={p.p1!r}, p2={p.p2!r}, s={s!r}"
        )
    return den


def reflectance(p: AmplitudePair, eps12: float, theta: float) -> float:
    if not eps12 > 0:
        raise DomainError(f"eps12 must be positive, got {eps12!r}")
    cos_t = math.cos(theta)
    s = exit_wavenumber(eps12, theta)
    prod = p.p1 * p.p2
    num = s * (p.p_bar + prod) + cos_t * (p.p_bar - prod)
    return abs(num / _denominator(p, s, cos_t)) ** 2


def transmittance(p: AmplitudePair, eps12: float, theta: float) -> float:
    """Zero exactly under total internal reflection, ``sin^2 theta >= eps12``."""
    if not eps12 > 0:
        raise DomainError(f"eps12 must be positive, got {eps12!r}")
    cos_t = math.cos(theta)
    s = exit_wavenumber(eps12, theta)
    den = _denominator(p, s, cos_t)
    if s.real == 0:
        return 0.0
    return cos_t * s.real * abs((p.p2 - p.p1) / den) ** 2


def absorptance(t: float, r: float) -> float:
    return 1 - t - r


def evaluate(
    metal: MetalParameters,
    stack: StackConfiguration,
    wave: IncidentWave,
    control: SeriesControl = SeriesControl(),
) -> tuple[OpticalCoefficients, ImpedancePair]:
    """Full pipeline: impedances, amplitude factors, then T, R and A.

    Returns the coefficients together with the impedances, whose
    ``terms_used`` and ``tail_bound`` serve as convergence diagnostics.
    Upstream model errors propagate with the parameter values appended.
    """
    try:
        z = impedances(metal, stack, wave, control)
        p = amplitude_factors(z, stack.eps1, wave.theta)
        eps12 = relative_permittivity_ratio(stack)
        t = transmittance(p, eps12, wave.theta)
        r = reflectance(p, eps12, wave.theta)
    except Exception as err:
        if err.args and isinstance(err.args[0], str):
            err.args = (
                f"{err.args[0]} [Omega={wave.omega_ratio!r}, theta={wave.theta!r}, "
                f"d_nm={stack.d_nm!r}, eps1={stack.eps1!r}, eps2={stack.eps2!r}]",
            ) + err.args[1:]
        raise
    return OpticalCoefficients.from_tr(t, r), z


def coefficients(
    metal: MetalParameters,
    stack: StackConfiguration,
    wave: IncidentWave,
    control: SeriesControl = SeriesControl(),
) -> OpticalCoefficients:
    """T, R, A of the film; see :func:`evaluate` for the diagnostics."""
    return evaluate(metal, stack, wave, control)[0]
