"""Structured matrices ``T = a*I + b*Phi``.

For a fixed nonzero ``alpha`` the imaginary unit matrix is

    Phi = [[0, j], [j*alpha**2, 0]],   Phi @ Phi = -alpha**2 * I

so the set ``{a*I + b*Phi}`` with real ``a, b`` behaves like the complex
numbers with ``j**2`` replaced by ``-alpha**2``. The real companion
``Psi = -j*Phi = [[0, 1], [alpha**2, 0]]`` squares to ``alpha**2 * I``,
which gives the closed power rule in :func:`psi_pow`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AlphaMismatchError,
    MatrixOverflowError,
    SingularMatrixError,
    ZeroAlphaError,
)
from .mat2c import Mat2c, identity, mat_mul

__all__ = [
    "TMatrix",
    "make_t",
    "to_dense",
    "phi_dense",
    "psi_dense",
    "t_mul",
    "t_inverse",
    "t_det",
    "psi_pow",
    "psi_pow_repeated",
]


def _check_alpha(alpha: float) -> None:
    if alpha == 0:
        raise ZeroAlphaError("alpha must be nonzero")


@dataclass(frozen=True, slots=True)
class TMatrix:
    """The triple ``(a, b, alpha)`` standing for ``a*I + b*Phi(alpha)``."""

    a: float
    b: float
    alpha: float

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    def __matmul__(self, other: "TMatrix") -> "TMatrix":
        return t_mul(self, other)


def make_t(a: float, b: float, alpha: float) -> TMatrix:
    return TMatrix(float(a), float(b), float(alpha))


def to_dense(T: TMatrix) -> Mat2c:
    a = complex(T.a, 0.0)
    return Mat2c(a, complex(0.0, T.b), complex(0.0, T.alpha * T.alpha * T.b), a)


def phi_dense(alpha: float) -> Mat2c:
    _check_alpha(alpha)
    return Mat2c(0j, 1j, complex(0.0, alpha * alpha), 0j)


def psi_dense(alpha: float) -> Mat2c:
    _check_alpha(alpha)
    return Mat2c(0j, 1 + 0j, complex(alpha * alpha, 0.0), 0j)


def t_det(T: TMatrix) -> float:
    return T.a * T.a + T.alpha * T.alpha * (T.b * T.b)


def t_mul(T1: TMatrix, T2: TMatrix) -> TMatrix:
    # Bitwise alpha equality: nearby alphas are different algebras.
    if T1.alpha != T2.alpha:
        raise AlphaMismatchError(f"alpha {T1.alpha!r} != {T2.alpha!r}")
    alpha2 = T1.alpha * T1.alpha
    # Both components are written so that swapping T1 and T2 is bit-exact.
    a = T1.a * T2.a - alpha2 * (T1.b * T2.b)
    b = T1.a * T2.b + T2.a * T1.b
    return TMatrix(a, b, T1.alpha)


def t_inverse(T: TMatrix) -> TMatrix:
    det = t_det(T)
    if det == 0:
        raise SingularMatrixError("a and b are both zero")
    return TMatrix(T.a / det, -T.b / det, T.alpha)


def psi_pow(alpha: float, n: int) -> Mat2c:
    """Return ``Psi(alpha)**n`` without forming any matrix product.

    Even ``n`` gives ``alpha**n * I``; odd ``n`` gives
    ``alpha**(n-1) * Psi``.

    Raises
    ------
    ZeroAlphaError
        If ``alpha == 0``.
    ValueError
        If ``n`` is negative.
    MatrixOverflowError
        If an entry of the result is not finite.
    """
    _check_alpha(alpha)
    if n < 0:
        raise ValueError("n must be a natural number")
    r = n % 2
    try:
        p = alpha ** (n - r)
    except OverflowError as exc:
        raise MatrixOverflowError(f"alpha**{n - r} overflows") from exc
    if r == 0:
        out = Mat2c(complex(p, 0.0), 0j, 0j, complex(p, 0.0))
    else:
        out = Mat2c(0j, complex(p, 0.0), complex(p * (alpha * alpha), 0.0), 0j)
    if not all(math.isfinite(abs(z)) for z in out.entries()):
        raise MatrixOverflowError(f"Psi({alpha!r})**{n} is not finite")
    return out


def psi_pow_repeated(alpha: float, n: int) -> Mat2c:
    """Brute-force ``Psi(alpha)**n`` as ``n`` successive dense products."""
    if n < 0:
        raise ValueError("n must be a natural number")
    psi = psi_dense(alpha)
    out = identity()
    for _ in range(n):
        out = mat_mul(out, psi)
    return out
