"""Acoustic transfer-matrix chains of uniform ducts.

Each segment of cross-section ``S`` and length ``L`` in a fluid with
sound speed ``c`` gets ``alpha = S/c`` and the phase ``phi = omega*L/S``,
so that ``alpha*phi = omega*L/c`` is the plane-wave phase ``k*L``. Its
matrix is ``exp_phi(alpha, phi)``:

    [[cos(kL),          j*sin(kL)/alpha],
     [j*alpha*sin(kL),  cos(kL)        ]]

Fluid density does not enter ``alpha``, so the off-diagonal entries are
not physical impedances; rescale by ``rho`` outside this module if you
need them. No junction matrices are inserted between segments of
different area: a chain is the plain product of its segment matrices,
ordered from the source (leftmost) to the termination.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import kernels
from .errors import EmptyChainError, EmptySweepError
from .mat2c import Mat2c, identity, mat_det, mat_mul
from .matexp import exp_phi

__all__ = [
    "DuctSegment",
    "Medium",
    "AcousticState",
    "SweepRow",
    "segment_alpha",
    "segment_phase",
    "segment_matrix",
    "cascade",
    "propagate",
    "frequency_sweep",
]


def _positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True, slots=True)
class DuctSegment:
    S: float  # cross-section area, m^2
    L: float  # length, m

    def __post_init__(self) -> None:
        _positive("S", self.S)
        _positive("L", self.L)


@dataclass(frozen=True, slots=True)
class Medium:
    c: float  # sound speed, m/s

    def __post_init__(self) -> None:
        _positive("c", self.c)


@dataclass(frozen=True, slots=True)
class AcousticState:
    """Two-component state acted on by chain matrices.

    ``p`` is the upper (pressure-like) and ``v`` the lower (flow-like)
    component; no units are implied.
    """

    p: complex
    v: complex


class SweepRow(NamedTuple):
    omega: float
    matrix: Mat2c
    det_deviation: float


def segment_alpha(seg: DuctSegment, med: Medium) -> float:
    return seg.S / med.c


def segment_phase(seg: DuctSegment, omega: float) -> float:
    return omega * seg.L / seg.S


def _check_omega(omega: float) -> None:
    if not (math.isfinite(omega) and omega >= 0):
        raise ValueError(f"omega must be finite and >= 0, got {omega!r}")


def segment_matrix(seg: DuctSegment, med: Medium, omega: float) -> Mat2c:
    _check_omega(omega)
    return exp_phi(segment_alpha(seg, med), segment_phase(seg, omega))


def cascade(segments: Sequence[DuctSegment], med: Medium, omega: float) -> Mat2c:
    """Product ``M1 @ M2 @ ... @ Mn`` of the segment matrices at one ``omega``."""
    if not segments:
        raise EmptyChainError("chain has no segments")
    out = identity()
    for seg in segments:
        out = mat_mul(out, segment_matrix(seg, med, omega))
    return out


def propagate(state: AcousticState, M: Mat2c) -> AcousticState:
    return AcousticState(M.e11 * state.p + M.e12 * state.v,
                         M.e21 * state.p + M.e22 * state.v)


def frequency_sweep(segments: Sequence[DuctSegment], med: Medium,
                    omegas: Sequence[float]) -> list[SweepRow]:
    """Cascade matrix and ``|det - 1|`` for every angular frequency.

    Rows come back in the order of ``omegas``. The chain products run in
    the compiled kernel when it is available.
    """
    if not segments:
        raise EmptyChainError("chain has no segments")
    omegas = [float(w) for w in omegas]
    if not omegas:
        raise EmptySweepError("no frequencies given")
    for w in omegas:
        _check_omega(w)
    flat = kernels.sweep_cascade([s.S for s in segments], [s.L for s in segments],
                                 med.c, omegas)
    rows = []
    for k, w in enumerate(omegas):
        d11, o12, o21, d22 = flat[4 * k:4 * k + 4]
        M = Mat2c(complex(d11, 0.0), complex(0.0, o12),
                  complex(0.0, o21), complex(d22, 0.0))
        rows.append(SweepRow(w, M, abs(mat_det(M) - 1)))
    return rows
