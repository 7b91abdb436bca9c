"""Surface impedances of a film with specular electron reflection.

Both impedances are one-sided mode sums,

    Z1 = (4 i Omega / W) * sum_{m odd >= 1} t(m)
    Z2 = (2 i Omega / W) * t(0) + (4 i Omega / W) * sum_{m even >= 2} t(m)
    t(m) = 1 / (Omega^2 eps_tr(q1(m)) - Q^2(m)),

obtained by pairing the +m and -m terms of the symmetric two-sided sums.
For large m the terms approach ``-W^2 / (pi m)^2``, so the truncated sum is
corrected with the exact same-parity sum of that asymptote (a Hurwitz zeta
value) and the remaining error is estimated from how far the last summed
term is from the asymptote.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import zeta

from . import _backend
from .errors import ConvergenceError, DomainError, ResonanceError
from .units import IncidentWave, MetalParameters, StackConfiguration, reduced_thickness

_FIRST_BLOCK = 16


@dataclass(frozen=True)
class SeriesControl:
    """Truncation controls for the mode sums.

    ``max_terms`` caps the number of modes summed per impedance.
    """

    rel_tol: float = 1e-9
    max_terms: int = 200_000

    def __post_init__(self):
        if not 0 < self.rel_tol < 1:
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if self.max_terms < 16:
            raise DomainError(f"max_terms must be at least 16, got {self.max_terms!r}")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    tail_bound: float


@dataclass(frozen=True)
class ImpedancePair:
    z1: complex
    z2: complex
    terms_used: int
    tail_bound: float


@dataclass(frozen=True)
class _ModeInputs:
    omega: float
    eps: float
    W: float
    vr: float
    qz_sq: float

    @classmethod
    def build(cls, metal, stack, wave):
        W = reduced_thickness(metal, stack.d_nm)
        qz = math.sqrt(stack.eps1) * wave.omega_ratio * math.sin(wave.theta)
        return cls(wave.omega_ratio, metal.eps_coll, W, metal.velocity_ratio, qz * qz)

    def block(self, m0, count):
        s, last, bad = _backend.mode_block_sum(
            m0, count, self.omega, self.eps, self.W, self.vr, self.qz_sq
        )
        if bad >= 0:
            raise ResonanceError(
                f"vanishing mode denominator at mode {bad} "
                f"(Omega={self.omega!r}, eps={self.eps!r}, W={self.W!r})",
                mode=bad,
            )
        return s, last


def _parity_tail(last_mode: int) -> float:
    """``sum 1/m^2`` over ``m = last_mode + 2, last_mode + 4, ...``."""
    return float(zeta(2.0, (last_mode + 2) / 2.0)) / 4.0


def _adaptive_sum(inp: _ModeInputs, first_mode: int, offset: complex, control: SeriesControl):
    """Tail-corrected ``offset + sum_{m = first_mode, first_mode + 2, ...} t(m)``.

    Returns ``(estimate, terms_used, tail_bound)`` in units of the bare sum.
    """
    scale = (inp.W / math.pi) ** 2
    re_parts, im_parts = [], []
    used = 0
    next_mode = first_mode
    block = _FIRST_BLOCK
    previous = None
    while True:
        count = min(block, control.max_terms - used)
        s, last = inp.block(next_mode, count)
        re_parts.append(s.real)
        im_parts.append(s.imag)
        used += count
        last_mode = next_mode + 2 * (count - 1)
        next_mode = last_mode + 2

        tail = -scale * _parity_tail(last_mode)
        asymptote = -scale / (last_mode * last_mode)
        bound = abs(tail) * abs(last / asymptote - 1)
        estimate = offset + complex(math.fsum(re_parts), math.fsum(im_parts)) + tail
        target = control.rel_tol * abs(estimate)
        if previous is not None and bound <= target and abs(estimate - previous) <= target:
            return estimate, used, bound
        if used >= control.max_terms:
            raise ConvergenceError(
                f"mode sum not converged after {used} terms "
                f"(tail bound {bound:.3g}, requested {target:.3g})",
                best_estimate=estimate,
                terms_used=used,
                tail_bound=bound,
            )
        previous = estimate
        block = used


def _finish(inp: _ModeInputs, result) -> SeriesResult:
    estimate, used, bound = result
    prefactor = 4j * inp.omega / inp.W
    return SeriesResult(prefactor * estimate, used, abs(prefactor) * bound)


def _scaled_convergence_error(inp: _ModeInputs, err: ConvergenceError) -> ConvergenceError:
    prefactor = 4j * inp.omega / inp.W
    return ConvergenceError(
        str(err),
        best_estimate=prefactor * err.best_estimate,
        terms_used=err.terms_used,
        tail_bound=abs(prefactor) * err.tail_bound,
    )


def impedance_antisymmetric(
    metal: MetalParameters,
    stack: StackConfiguration,
    wave: IncidentWave,
    control: SeriesControl = SeriesControl(),
) -> SeriesResult:
    """Impedance ``Z1`` for the field configuration antisymmetric in ``E_y``.

    Sums the odd modes.

    Raises
    ------
    ResonanceError
        A mode denominator vanished; ``err.mode`` names the mode.
    ConvergenceError
        ``control.max_terms`` was reached first; ``err.best_estimate`` holds
        the impedance reached so far.
    """
    inp = _ModeInputs.build(metal, stack, wave)
    try:
        return _finish(inp, _adaptive_sum(inp, 1, 0j, control))
    except ConvergenceError as err:
        raise _scaled_convergence_error(inp, err) from None


def impedance_symmetric(
    metal: MetalParameters,
    stack: StackConfiguration,
    wave: IncidentWave,
    control: SeriesControl = SeriesControl(),
) -> SeriesResult:
    """Impedance ``Z2`` for the field configuration symmetric in ``E_y``.

    The unpaired ``m = 0`` term carries half the weight of the paired even
    modes.  Errors as in :func:`impedance_antisymmetric`.
    """
    inp = _ModeInputs.build(metal, stack, wave)
    zero_term, _ = inp.block(0, 1)
    try:
        result = _adaptive_sum(inp, 2, zero_term / 2, control)
    except ConvergenceError as err:
        raise _scaled_convergence_error(inp, err) from None
    estimate, used, bound = result
    return _finish(inp, (estimate, used + 1, bound))


def impedances(
    metal: MetalParameters,
    stack: StackConfiguration,
    wave: IncidentWave,
    control: SeriesControl = SeriesControl(),
) -> ImpedancePair:
    """Both impedances; ``terms_used`` is summed over the two series."""
    z1 = impedance_antisymmetric(metal, stack, wave, control)
    z2 = impedance_symmetric(metal, stack, wave, control)
    return ImpedancePair(
        z1.value, z2.value, z1.terms_used + z2.terms_used, max(z1.tail_bound, z2.tail_bound)
    )


def brute_force_sum(metal, stack, wave, parity: int, n_terms: int) -> complex:
    """Plain truncated impedance sum over ``n_terms`` modes, no tail correction.

    ``parity`` is 1 for ``Z1`` (odd modes) and 2 for ``Z2`` (even modes plus
    the half-weight zero mode).  Uses the numpy kernel regardless of backend.
    """
    from ._fallback import mode_terms

    inp = _ModeInputs.build(metal, stack, wave)
    total = 0j
    chunk = 1 << 16
    first = 1 if parity == 1 else 2
    done = 0
    while done < n_terms:
        count = min(chunk, n_terms - done)
        terms, bad = mode_terms(first + 2 * done, count, inp.omega, inp.eps, inp.W, inp.vr, inp.qz_sq)
        if terms is None:
            raise ResonanceError(f"vanishing mode denominator at mode {bad}", mode=bad)
        total += terms.sum()
        done += count
    if parity == 2:
        zero, bad = mode_terms(0, 1, inp.omega, inp.eps, inp.W, inp.vr, inp.qz_sq)
        if zero is None:
            raise ResonanceError("vanishing mode denominator at mode 0", mode=0)
        total += zero[0] / 2
    return 4j * inp.omega / inp.W * total
