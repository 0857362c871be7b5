"""Pure-Python numeric kernels.

Reference twin of ``_ckernels.pyx``. Both files perform the same real
floating-point operations in the same order, so on an IEEE 754 platform
they return bit-identical results; keep them in lockstep when editing.
"""
from __future__ import annotations

import math
from array import array

from .errors import NoConvergenceError

BACKEND = "python"


def squaring_steps(norm: float) -> int:
    """``max(0, ceil(log2(norm)))``, exact at powers of two."""
    if not norm > 1.0:
        return 0
    m, e = math.frexp(norm)
    return e - 1 if m == 0.5 else e


def balance_exponent(b_abs: float, c_abs: float) -> int:
    """Exponent ``k`` so that ``diag(1, 2**k)`` balances the off-diagonals.

    With ``B = D^-1 M D`` the (1,2) entry is multiplied and the (2,1)
    entry divided by ``2**k``; ``k`` halves the gap between their binary
    exponents, rounded toward zero.
    """
    if b_abs == 0.0 or c_abs == 0.0:
        return 0
    diff = math.frexp(c_abs)[1] - math.frexp(b_abs)[1]
    return diff // 2 if diff >= 0 else -((-diff) // 2)


def expm_series(m11: complex, m12: complex, m21: complex, m22: complex,
                tol: float, max_terms: int):
    """Scaled-and-squared Taylor series for a 2x2 complex matrix.

    The off-diagonal entries are first balanced by an exact power-of-two
    similarity, which keeps the squaring count low for lopsided inputs.
    Returns ``(r11, r12, r21, r22, n_terms, n_squarings)``.
    """
    ar, ai = m11.real, m11.imag
    br, bi = m12.real, m12.imag
    cr, ci = m21.real, m21.imag
    dr, di = m22.real, m22.imag

    kb = balance_exponent(math.hypot(br, bi), math.hypot(cr, ci))
    br = math.ldexp(br, kb); bi = math.ldexp(bi, kb)
    cr = math.ldexp(cr, -kb); ci = math.ldexp(ci, -kb)

    norm = max(math.hypot(ar, ai), math.hypot(br, bi),
               math.hypot(cr, ci), math.hypot(dr, di))
    s = squaring_steps(norm)
    f = math.ldexp(1.0, -s)
    ar *= f; ai *= f; br *= f; bi *= f
    cr *= f; ci *= f; dr *= f; di *= f

    # running sum S and current term T, both start at I
    s11r, s11i, s12r, s12i = 1.0, 0.0, 0.0, 0.0
    s21r, s21i, s22r, s22i = 0.0, 0.0, 1.0, 0.0
    t11r, t11i, t12r, t12i = 1.0, 0.0, 0.0, 0.0
    t21r, t21i, t22r, t22i = 0.0, 0.0, 1.0, 0.0

    n = 1
    converged = False
    while n < max_terms:
        inv = 1.0 / n
        # T <- (T @ A) / n
        u11r = (t11r * ar - t11i * ai + t12r * cr - t12i * ci) * inv
        u11i = (t11r * ai + t11i * ar + t12r * ci + t12i * cr) * inv
        u12r = (t11r * br - t11i * bi + t12r * dr - t12i * di) * inv
        u12i = (t11r * bi + t11i * br + t12r * di + t12i * dr) * inv
        u21r = (t21r * ar - t21i * ai + t22r * cr - t22i * ci) * inv
        u21i = (t21r * ai + t21i * ar + t22r * ci + t22i * cr) * inv
        u22r = (t21r * br - t21i * bi + t22r * dr - t22i * di) * inv
        u22i = (t21r * bi + t21i * br + t22r * di + t22i * dr) * inv
        t11r, t11i, t12r, t12i = u11r, u11i, u12r, u12i
        t21r, t21i, t22r, t22i = u21r, u21i, u22r, u22i
        s11r += t11r; s11i += t11i; s12r += t12r; s12i += t12i
        s21r += t21r; s21i += t21i; s22r += t22r; s22i += t22i
        n += 1
        tmax = max(math.hypot(t11r, t11i), math.hypot(t12r, t12i),
                   math.hypot(t21r, t21i), math.hypot(t22r, t22i))
        if tmax < tol:
            converged = True
            break
    if not converged:
        raise NoConvergenceError(
            f"series term still >= {tol!r} after {max_terms} terms")

    for _ in range(s):
        u11r = s11r * s11r - s11i * s11i + s12r * s21r - s12i * s21i
        u11i = s11r * s11i + s11i * s11r + s12r * s21i + s12i * s21r
        u12r = s11r * s12r - s11i * s12i + s12r * s22r - s12i * s22i
        u12i = s11r * s12i + s11i * s12r + s12r * s22i + s12i * s22r
        u21r = s21r * s11r - s21i * s11i + s22r * s21r - s22i * s21i
        u21i = s21r * s11i + s21i * s11r + s22r * s21i + s22i * s21r
        u22r = s21r * s12r - s21i * s12i + s22r * s22r - s22i * s22i
        u22i = s21r * s12i + s21i * s12r + s22r * s22i + s22i * s22r
        s11r, s11i, s12r, s12i = u11r, u11i, u12r, u12i
        s21r, s21i, s22r, s22i = u21r, u21i, u22r, u22i

    s12r = math.ldexp(s12r, -kb); s12i = math.ldexp(s12i, -kb)
    s21r = math.ldexp(s21r, kb); s21i = math.ldexp(s21i, kb)
    return (complex(s11r, s11i), complex(s12r, s12i),
            complex(s21r, s21i), complex(s22r, s22i), n, s)


def sweep_cascade(areas, lengths, c: float, omegas) -> array:
    """Cascade products of uniform-duct matrices over a list of omegas.

    Every factor and every partial product has the shape
    ``[[d11, j*o12], [j*o21, d22]]`` with real ``d11, o12, o21, d22``,
    so the chain is carried in four reals. Returns a flat ``array('d')``
    holding ``d11, o12, o21, d22`` per omega.
    """
    nseg = len(areas)
    alphas = [areas[i] / c for i in range(nseg)]
    out = array("d", bytes(8 * 4 * len(omegas)))
    for k, omega in enumerate(omegas):
        p11, p12, p21, p22 = 1.0, 0.0, 0.0, 1.0
        for i in range(nseg):
            alpha = alphas[i]
            x = alpha * (omega * lengths[i] / areas[i])
            cs = math.cos(x)
            sn = math.sin(x)
            q12 = sn / alpha
            q21 = alpha * sn
            p11, p12, p21, p22 = (
                p11 * cs - p12 * q21,
                p11 * q12 + p12 * cs,
                p21 * cs + p22 * q21,
                p22 * cs - p21 * q12,
            )
        out[4 * k] = p11
        out[4 * k + 1] = p12
        out[4 * k + 2] = p21
        out[4 * k + 3] = p22
    return out
