"""Matrix exponentials: the generic series and the closed form for ``phi*Phi``.

:func:`exp_series` sums the Taylor series of ``exp(M)`` for any 2x2
complex matrix and is the reference every closed-form routine is checked
against. :func:`exp_phi` evaluates

    exp(phi*Phi) = cos(alpha*phi) * I + sin(alpha*phi)/alpha * Phi

directly. The rest of the module builds the identity checks that follow
from that formula (unit determinant, ``exp(2*m*pi*Phi) = I``,
``exp((1+4k)*pi/2*Phi) = Phi`` and the Pauli ``sigma_1`` representation).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .errors import MatrixOverflowError, ZeroAlphaError
from .mat2c import Mat2c, identity, mat_det, mat_scale, max_abs_diff
from .tclass import TMatrix, phi_dense, psi_dense

__all__ = [
    "SeriesConfig",
    "IdentityReport",
    "exp_series",
    "exp_phi",
    "exp_t",
    "classic_euler",
    "euler_deviation",
    "sigma1_via_exp",
    "note4_tolerance",
    "run_identity_suite",
    "NOTE1_TOL",
    "NOTE2_TOL",
    "NOTE3_TOL",
]

NOTE1_TOL = 1e-14
NOTE2_TOL = 1e-12
NOTE3_TOL = 1e-12
NOTE4_UNIT_TOL = 1e-13


@dataclass(frozen=True, slots=True)
class SeriesConfig:
    """Truncation rule for :func:`exp_series`.

    The sum stops once the newest term's largest entry modulus is below
    ``tol``; reaching ``max_terms`` terms first is an error.
    """

    tol: float = 1e-15
    max_terms: int = 100

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 2:
            raise ValueError("max_terms must be at least 2")


DEFAULT_SERIES = SeriesConfig()


def exp_series(M: Mat2c, cfg: SeriesConfig = DEFAULT_SERIES) -> Mat2c:
    """Truncated Taylor series for ``exp(M)`` with scaling and squaring.

    ``M`` is first divided by ``2**s`` with
    ``s = max(0, ceil(log2(max |M_rc|)))``, the series of the scaled
    matrix is summed, and the sum is squared ``s`` times.

    Raises
    ------
    NoConvergenceError
        If ``cfg.max_terms`` terms are used without meeting ``cfg.tol``.
    """
    r11, r12, r21, r22, _, _ = kernels.expm_series(
        M.e11, M.e12, M.e21, M.e22, cfg.tol, cfg.max_terms)
    return Mat2c(r11, r12, r21, r22)


def exp_phi(alpha: float, phi: float) -> Mat2c:
    if alpha == 0:
        raise ZeroAlphaError("alpha must be nonzero")
    x = alpha * phi
    cs = math.cos(x)
    sn = math.sin(x)
    return Mat2c(complex(cs, 0.0), complex(0.0, sn / alpha),
                 complex(0.0, alpha * sn), complex(cs, 0.0))


def exp_t(T: TMatrix) -> Mat2c:
    """``exp(a*I + b*Phi) = exp(a) * exp(b*Phi)``; ``a*I`` commutes with ``Phi``."""
    try:
        scale = math.exp(T.a)
    except OverflowError as exc:
        raise MatrixOverflowError(f"exp({T.a!r}) overflows") from exc
    return mat_scale(complex(scale, 0.0), exp_phi(T.alpha, T.b))


def classic_euler(phi: float) -> complex:
    return complex(math.cos(phi), math.sin(phi))


def euler_deviation(phi: float) -> float:
    """Mismatch between ``exp(j*phi)`` and the entries of ``exp_phi(1, phi)``.

    The real part is compared with the (1,1) entry and the imaginary part
    with ``-j`` times the (1,2) entry.
    """
    z = classic_euler(phi)
    E = exp_phi(1.0, phi)
    return max(abs(z.real - E.e11), abs(z.imag - (-1j * E.e12)))


def sigma1_via_exp(k: int) -> Mat2c:
    m = 1 + 4 * k
    return mat_scale(-1j, exp_phi(1.0, m * math.pi / 2))


def note4_tolerance(k: int) -> float:
    """Tolerance for the ``m = 1 + 4k`` checks; ``m*pi/2`` is inexact."""
    return NOTE4_UNIT_TOL * max(1, abs(1 + 4 * k))


@dataclass(frozen=True)
class IdentityReport:
    """Maximum deviations measured by :func:`run_identity_suite`.

    ``note4_dev`` and ``pauli_dev`` are the worst raw deviations;
    ``note4_ratio`` and ``pauli_ratio`` are the worst deviation divided by
    its own ``k``-dependent tolerance, so a ratio ``<= 1`` means every
    sample passed.
    """

    note1_dev: float
    note2_dev: float
    note3_dev: float
    note4_dev: float
    pauli_dev: float
    params_used: dict = field(default_factory=dict)
    note4_ratio: float = 0.0
    pauli_ratio: float = 0.0

    def passed(self) -> dict[str, bool]:
        return {
            "note1": self.note1_dev <= NOTE1_TOL,
            "note2": self.note2_dev <= NOTE2_TOL,
            "note3": self.note3_dev <= NOTE3_TOL,
            "note4": self.note4_ratio <= 1.0,
            "pauli": self.pauli_ratio <= 1.0,
        }

    def tolerances(self) -> dict[str, float]:
        ks = self.params_used.get("k", [])
        worst = max((note4_tolerance(k) for k in ks), default=NOTE4_UNIT_TOL)
        return {
            "note1": NOTE1_TOL,
            "note2": NOTE2_TOL,
            "note3": NOTE3_TOL,
            "note4": worst,
            "pauli": worst,
        }


def run_identity_suite(alpha: float, phi_samples, m_samples, k_samples) -> IdentityReport:
    """Measure the identities implied by the closed form.

    Only the unit-determinant check uses ``alpha``; the classical Euler,
    full-turn, quarter-turn and Pauli checks are defined at ``alpha = 1``.
    """
    if alpha == 0:
        raise ZeroAlphaError("alpha must be nonzero")
    phis = [float(p) for p in phi_samples]
    ms = [int(m) for m in m_samples]
    ks = [int(k) for k in k_samples]

    note1 = max((euler_deviation(p) for p in phis), default=0.0)
    note2 = max((abs(mat_det(exp_phi(alpha, p)) - 1) for p in phis), default=0.0)
    eye = identity()
    note3 = max((max_abs_diff(exp_phi(1.0, 2 * m * math.pi), eye) for m in ms),
                default=0.0)

    phi1 = phi_dense(1.0)
    sigma1 = psi_dense(1.0)
    note4 = pauli = note4_ratio = pauli_ratio = 0.0
    for k in ks:
        tol = note4_tolerance(k)
        d4 = max_abs_diff(exp_phi(1.0, (1 + 4 * k) * math.pi / 2), phi1)
        dp = max_abs_diff(sigma1_via_exp(k), sigma1)
        note4 = max(note4, d4)
        pauli = max(pauli, dp)
        note4_ratio = max(note4_ratio, d4 / tol)
        pauli_ratio = max(pauli_ratio, dp / tol)

    return IdentityReport(
        note1_dev=note1,
        note2_dev=note2,
        note3_dev=note3,
        note4_dev=note4,
        pauli_dev=pauli,
        params_used={"alpha": alpha, "phi": phis, "m": ms, "k": ks},
        note4_ratio=note4_ratio,
        pauli_ratio=pauli_ratio,
    )

