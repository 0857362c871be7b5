# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels.

Line-for-line twin of ``_pykernels.py``; see that module for the
contracts. Built with ``-ffp-contract=off`` (no fused multiply-add) and
``-fno-builtin-sin -fno-builtin-cos`` (no merging into ``sincos``) so
results match the Python twin bit for bit.
"""
from cpython cimport array
from libc.math cimport cos, sin, hypot, frexp, ldexp
import array as _array

from .errors import NoConvergenceError

BACKEND = "cython"


cdef inline double _max4(double a, double b, double c, double d) nogil:
    cdef double m = a
    if b > m:
        m = b
    if c > m:
        m = c
    if d > m:
        m = d
    return m


cpdef int squaring_steps(double norm):
    cdef int e
    cdef double m
    if not norm > 1.0:
        return 0
    m = frexp(norm, &e)
    return e - 1 if m == 0.5 else e


cpdef int balance_exponent(double b_abs, double c_abs):
    cdef int eb, ec, diff
    if b_abs == 0.0 or c_abs == 0.0:
        return 0
    frexp(b_abs, &eb)
    frexp(c_abs, &ec)
    diff = ec - eb
    return diff // 2 if diff >= 0 else -((-diff) // 2)


def expm_series(complex m11, complex m12, complex m21, complex m22,
                double tol, int max_terms):
    cdef double ar = m11.real, ai = m11.imag
    cdef double br = m12.real, bi = m12.imag
    cdef double cr = m21.real, ci = m21.imag
    cdef double dr = m22.real, di = m22.imag
    cdef double norm, f, inv, tmax
    cdef double s11r, s11i, s12r, s12i, s21r, s21i, s22r, s22i
    cdef double t11r, t11i, t12r, t12i, t21r, t21i, t22r, t22i
    cdef double u11r, u11i, u12r, u12i, u21r, u21i, u22r, u22i
    cdef int s, n, q, kb
    cdef bint converged = False

    kb = balance_exponent(hypot(br, bi), hypot(cr, ci))
    br = ldexp(br, kb); bi = ldexp(bi, kb)
    cr = ldexp(cr, -kb); ci = ldexp(ci, -kb)

    norm = _max4(hypot(ar, ai), hypot(br, bi), hypot(cr, ci), hypot(dr, di))
    s = squaring_steps(norm)
    f = ldexp(1.0, -s)
    ar *= f; ai *= f; br *= f; bi *= f
    cr *= f; ci *= f; dr *= f; di *= f

    s11r = 1.0; s11i = 0.0; s12r = 0.0; s12i = 0.0
    s21r = 0.0; s21i = 0.0; s22r = 1.0; s22i = 0.0
    t11r = 1.0; t11i = 0.0; t12r = 0.0; t12i = 0.0
    t21r = 0.0; t21i = 0.0; t22r = 1.0; t22i = 0.0

    n = 1
    while n < max_terms:
        inv = 1.0 / n
        u11r = (t11r * ar - t11i * ai + t12r * cr - t12i * ci) * inv
        u11i = (t11r * ai + t11i * ar + t12r * ci + t12i * cr) * inv
        u12r = (t11r * br - t11i * bi + t12r * dr - t12i * di) * inv
        u12i = (t11r * bi + t11i * br + t12r * di + t12i * dr) * inv
        u21r = (t21r * ar - t21i * ai + t22r * cr - t22i * ci) * inv
        u21i = (t21r * ai + t21i * ar + t22r * ci + t22i * cr) * inv
        u22r = (t21r * br - t21i * bi + t22r * dr - t22i * di) * inv
        u22i = (t21r * bi + t21i * br + t22r * di + t22i * dr) * inv
        t11r = u11r; t11i = u11i; t12r = u12r; t12i = u12i
        t21r = u21r; t21i = u21i; t22r = u22r; t22i = u22i
        s11r += t11r; s11i += t11i; s12r += t12r; s12i += t12i
        s21r += t21r; s21i += t21i; s22r += t22r; s22i += t22i
        n += 1
        tmax = _max4(hypot(t11r, t11i), hypot(t12r, t12i),
                     hypot(t21r, t21i), hypot(t22r, t22i))
        if tmax < tol:
            converged = True
            break
    if not converged:
        raise NoConvergenceError(
            f"series term still >= {tol!r} after {max_terms} terms")

    for q in range(s):
        u11r = s11r * s11r - s11i * s11i + s12r * s21r - s12i * s21i
        u11i = s11r * s11i + s11i * s11r + s12r * s21i + s12i * s21r
        u12r = s11r * s12r - s11i * s12i + s12r * s22r - s12i * s22i
        u12i = s11r * s12i + s11i * s12r + s12r * s22i + s12i * s22r
        u21r = s21r * s11r - s21i * s11i + s22r * s21r - s22i * s21i
        u21i = s21r * s11i + s21i * s11r + s22r * s21i + s22i * s21r
        u22r = s21r * s12r - s21i * s12i + s22r * s22r - s22i * s22i
        u22i = s21r * s12i + s21i * s12r + s22r * s22i + s22i * s22r
        s11r = u11r; s11i = u11i; s12r = u12r; s12i = u12i
        s21r = u21r; s21i = u21i; s22r = u22r; s22i = u22i

    s12r = ldexp(s12r, -kb); s12i = ldexp(s12i, -kb)
    s21r = ldexp(s21r, kb); s21i = ldexp(s21i, kb)
    return (complex(s11r, s11i), complex(s12r, s12i),
            complex(s21r, s21i), complex(s22r, s22i), n, s)


def sweep_cascade(areas, lengths, double c, omegas):
    cdef double[::1] S = _array.array("d", areas)
    cdef double[::1] L = _array.array("d", lengths)
    cdef double[::1] W = _array.array("d", omegas)
    cdef Py_ssize_t nseg = S.shape[0], nw = W.shape[0], i, k
    cdef array.array alphas_arr = _array.array("d", [0.0]) * nseg
    cdef double[::1] alphas = alphas_arr
    cdef array.array out = _array.array("d", [0.0]) * (4 * nw)
    cdef double[::1] o = out
    cdef double omega, alpha, x, cs, sn, q12, q21
    cdef double p11, p12, p21, p22, n11, n12, n21, n22

    for i in range(nseg):
        alphas[i] = S[i] / c
    with nogil:
        for k in range(nw):
            omega = W[k]
            p11 = 1.0; p12 = 0.0; p21 = 0.0; p22 = 1.0
            for i in range(nseg):
                alpha = alphas[i]
                x = alpha * (omega * L[i] / S[i])
                cs = cos(x)
                sn = sin(x)
                q12 = sn / alpha
                q21 = alpha * sn
                n11 = p11 * cs - p12 * q21
                n12 = p11 * q12 + p12 * cs
                n21 = p21 * cs + p22 * q21
                n22 = p22 * cs - p21 * q12
                p11 = n11; p12 = n12; p21 = n21; p22 = n22
            o[4 * k] = p11
            o[4 * k + 1] = p12
            o[4 * k + 2] = p21
            o[4 * k + 3] = p22
    return out
