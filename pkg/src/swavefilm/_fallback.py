"""Vectorized numpy implementation of the mode-sum kernel.

Used when the compiled ``_kernel`` extension is unavailable, and as the
reference the extension is checked against.
"""
import numpy as np

from .dielectric import SERIES_TERMS, SERIES_THRESHOLD

_COEFFS = np.array([3.0 / ((2 * k - 1) * (2 * k + 1)) for k in range(1, SERIES_TERMS + 1)])

RESONANCE_FLOOR = 1e-300


def epsilon_transverse_array(q, omega, eps):
    """``eps_tr`` over an array of ``q`` at fixed ``omega`` and ``eps``."""
    q = np.asarray(q, dtype=float)
    w = complex(omega, eps)
    out = np.empty(q.shape, dtype=complex)
    small = q < SERIES_THRESHOLD * abs(w)
    if small.any():
        x = (q[small] / w) ** 2
        total = np.zeros(x.shape, dtype=complex)
        for c in _COEFFS[::-1]:
            total = total * x + c
        out[small] = 1 - total / (omega * w)
    big = ~small
    if big.any():
        qb = q[big]
        ratio = (w - qb) / (w + qb)
        log = np.log(ratio)
        if eps == 0:
            neg = (ratio.imag == 0) & (ratio.real < 0)
            log[neg] = np.log(-ratio.real[neg]) + 1j * np.pi
        bracket = 2 * w * qb + (w * w - qb * qb) * log
        out[big] = 1 - 3 * bracket / (4 * omega * qb**3)
    return out


def mode_terms(m0, count, omega, eps, W, vr, qz_sq):
    """Terms ``1 / (Omega^2 eps_tr - Q^2)`` for modes ``m0, m0 + 2, ...``.

    Returns ``(terms, bad_mode)``; ``bad_mode`` is the first mode whose
    denominator magnitude is below ``RESONANCE_FLOOR`` or ``-1``.
    """
    m = m0 + 2 * np.arange(count, dtype=float)
    qx = np.pi * m / W
    q_sq = qx * qx + qz_sq
    q1 = vr * np.sqrt(q_sq)
    den = omega * omega * epsilon_transverse_array(q1, omega, eps) - q_sq
    bad = np.abs(den) < RESONANCE_FLOOR
    if bad.any():
        return None, int(m[np.argmax(bad)])
    return 1.0 / den, -1


def mode_block_sum(m0, count, omega, eps, W, vr, qz_sq):
    """Sum of ``count`` same-parity mode terms starting at mode ``m0``.

    Returns ``(block_sum, last_term, bad_mode)``.
    """
    terms, bad = mode_terms(m0, count, omega, eps, W, vr, qz_sq)
    if terms is None:
        return 0j, 0j, bad
    return complex(terms.sum()), complex(terms[-1]), -1
