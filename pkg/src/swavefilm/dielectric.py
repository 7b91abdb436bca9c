"""Transverse permittivity of a degenerate electron gas with collisions.

The closed form

    eps_tr = 1 - 3 / (4 Omega q^3) * [2 w q + (w^2 - q^2) log((w - q) / (w + q))],
    w = Omega + i eps,

suffers catastrophic cancellation for small ``q / |w|``.  Below
``SERIES_THRESHOLD * |w|`` the even power series

    eps_tr = 1 - (3 / Omega) * sum_k q^(2k-2) / ((2k-1)(2k+1) w^(2k-1))

is used instead; its leading terms are the Drude form ``1 - 1/(Omega w)``
and the ``q^2 / (5 Omega w^3)`` correction.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BranchPointError, DomainError
from .units import IncidentWave, MetalParameters

#: Switch to the power series when ``q1 < SERIES_THRESHOLD * |Omega + i eps|``.
SERIES_THRESHOLD = 0.2
#: Number of series terms; the truncation error is below (0.2)**32.
SERIES_TERMS = 16

# 3 / ((2k-1)(2k+1)) for k = 1..SERIES_TERMS
_SERIES_COEFFS = tuple(3.0 / ((2 * k - 1) * (2 * k + 1)) for k in range(1, SERIES_TERMS + 1))


@dataclass(frozen=True)
class TransverseArgument:
    q1: float
    omega_ratio: float
    eps_coll: float

    def __post_init__(self):
        if not self.q1 >= 0:
            raise DomainError(f"q1 must be non-negative, got {self.q1!r}")
        if not self.omega_ratio > 0:
            raise DomainError(f"omega_ratio must be positive, got {self.omega_ratio!r}")
        if not self.eps_coll >= 0:
            raise DomainError(f"eps_coll must be non-negative, got {self.eps_coll!r}")


def drude_permittivity(omega_ratio: float, eps_coll: float) -> complex:
    """Local (q -> 0) limit ``1 - 1 / (Omega (Omega + i eps))``."""
    return 1 - 1 / (omega_ratio * complex(omega_ratio, eps_coll))


def _log_ratio(w: complex, q: float) -> complex:
    # Principal log of (w - q)/(w + q).  For eps = 0 and q > Omega the ratio is
    # real negative; take the +i*pi side (limit eps -> 0+) regardless of the
    # sign of the zero imaginary part produced by the division.
    ratio = (w - q) / (w + q)
    if ratio.imag == 0.0 and ratio.real < 0.0 and w.imag == 0.0:
        return complex(math.log(-ratio.real), math.pi)
    return cmath.log(ratio)


def epsilon_transverse_value(q1: float, omega_ratio: float, eps_coll: float) -> complex:
    """Scalar evaluation without dataclass validation (for inner loops)."""
    if not omega_ratio > 0:
        raise DomainError(f"omega_ratio must be positive, got {omega_ratio!r}")
    if eps_coll == 0 and q1 == omega_ratio:
        raise BranchPointError(f"q1 == Omega == {q1!r} with zero collision frequency")
    w = complex(omega_ratio, eps_coll)
    if q1 < SERIES_THRESHOLD * abs(w):
        x = (q1 / w) ** 2
        total = 0j
        for c in reversed(_SERIES_COEFFS):
            total = total * x + c
        return 1 - total / (omega_ratio * w)
    bracket = 2 * w * q1 + (w * w - q1 * q1) * _log_ratio(w, q1)
    return 1 - 3 * bracket / (4 * omega_ratio * q1**3)


def epsilon_transverse(arg: TransverseArgument) -> complex:
    """Transverse permittivity ``eps_tr(q1, Omega, eps)``.

    Raises
    ------
    BranchPointError
        If ``q1 == Omega`` with zero collision frequency.
    """
    return epsilon_transverse_value(arg.q1, arg.omega_ratio, arg.eps_coll)


def mode_wavevector(
    n: int, W: float, wave: IncidentWave, eps1: float, metal: MetalParameters
) -> tuple[float, float]:
    """Dimensionless wavevector of mode ``n``.

    Returns ``(q1, Q_sq)`` with ``Q_sq = (pi n / W)**2 + eps1 Omega^2 sin^2(theta)``
    and ``q1 = (v_F / c) sqrt(Q_sq)``.
    """
    if not W > 0:
        raise DomainError(f"reduced thickness must be positive, got {W!r}")
    if n < 0:
        raise DomainError(f"mode index must be non-negative, got {n!r}")
    qx = math.pi * n / W
    qz = math.sqrt(eps1) * wave.omega_ratio * math.sin(wave.theta)
    q_sq = qx * qx + qz * qz
    return metal.velocity_ratio * math.sqrt(q_sq), q_sq
