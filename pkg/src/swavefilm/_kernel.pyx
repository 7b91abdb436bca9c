# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mode-sum kernel; same contract as ``_fallback.mode_block_sum``."""
from libc.math cimport atan2, fabs, hypot, log, sqrt, M_PI

cdef enum:
    NTERMS = 16
cdef double COEFFS[NTERMS]
cdef int _k
for _k in range(1, NTERMS + 1):
    COEFFS[_k - 1] = 3.0 / ((2 * _k - 1) * (2 * _k + 1))

cdef double SERIES_THRESHOLD = 0.2
cdef double RESONANCE_FLOOR = 1e-300


cdef inline double complex _clog(double complex z, bint zero_coll):
    cdef double re = z.real, im = z.imag
    if zero_coll and im == 0.0 and re < 0.0:
        return log(-re) + 1j * M_PI
    return log(hypot(re, im)) + 1j * atan2(im, re)


cdef inline double complex _eps_tr(double q, double omega, double eps):
    cdef double complex w = omega + 1j * eps
    cdef double complex x, total, bracket
    cdef int k
    if q < SERIES_THRESHOLD * hypot(omega, eps):
        x = (q / w) * (q / w)
        total = 0.0
        for k in range(NTERMS - 1, -1, -1):
            total = total * x + COEFFS[k]
        return 1.0 - total / (omega * w)
    bracket = 2.0 * w * q + (w * w - q * q) * _clog((w - q) / (w + q), eps == 0.0)
    return 1.0 - 3.0 * bracket / (4.0 * omega * q * q * q)


def epsilon_transverse_scalar(double q, double omega, double eps):
    return _eps_tr(q, omega, eps)


def mode_block_sum(long m0, long count, double omega, double eps, double W,
                   double vr, double qz_sq):
    cdef double complex total = 0.0, comp = 0.0, term = 0.0, den, y, t
    cdef double qx, q_sq, m
    cdef long i
    for i in range(count):
        m = m0 + 2.0 * i
        qx = M_PI * m / W
        q_sq = qx * qx + qz_sq
        den = omega * omega * _eps_tr(vr * sqrt(q_sq), omega, eps) - q_sq
        if hypot(den.real, den.imag) < RESONANCE_FLOOR:
            return 0j, 0j, <long>m
        term = 1.0 / den
        # Kahan-compensated accumulation
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total, term, -1
