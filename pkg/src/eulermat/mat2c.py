"""Dense 2x2 complex matrices.

Entries are stored row-major as ``e11, e12, e21, e22`` using Python's
built-in ``complex``. Everything here is a plain value: every operation
returns a new matrix. Non-finite entries are outside the supported domain
and are not checked.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Mat2c",
    "identity",
    "zero",
    "diag",
    "mat_mul",
    "mat_add",
    "mat_scale",
    "mat_det",
    "max_abs_diff",
    "max_abs_entry",
]


@dataclass(frozen=True, slots=True)
class Mat2c:
    e11: complex
    e12: complex
    e21: complex
    e22: complex

    @classmethod
    def from_rows(cls, rows) -> "Mat2c":
        (a, b), (c, d) = rows
        return cls(complex(a), complex(b), complex(c), complex(d))

    def rows(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.e11, self.e12), (self.e21, self.e22))

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __matmul__(self, other: "Mat2c") -> "Mat2c":
        return mat_mul(self, other)

    def __add__(self, other: "Mat2c") -> "Mat2c":
        return mat_add(self, other)

    def __rmul__(self, c: complex) -> "Mat2c":
        return mat_scale(c, self)


def identity() -> Mat2c:
    return Mat2c(1 + 0j, 0j, 0j, 1 + 0j)


def zero() -> Mat2c:
    return Mat2c(0j, 0j, 0j, 0j)


def diag(d1: complex, d2: complex) -> Mat2c:
    return Mat2c(complex(d1), 0j, 0j, complex(d2))


def mat_mul(A: Mat2c, B: Mat2c) -> Mat2c:
    return Mat2c(
        A.e11 * B.e11 + A.e12 * B.e21,
        A.e11 * B.e12 + A.e12 * B.e22,
        A.e21 * B.e11 + A.e22 * B.e21,
        A.e21 * B.e12 + A.e22 * B.e22,
    )


def mat_add(A: Mat2c, B: Mat2c) -> Mat2c:
    return Mat2c(A.e11 + B.e11, A.e12 + B.e12, A.e21 + B.e21, A.e22 + B.e22)


def mat_scale(c: complex, A: Mat2c) -> Mat2c:
    return Mat2c(c * A.e11, c * A.e12, c * A.e21, c * A.e22)


def mat_det(A: Mat2c) -> complex:
    return A.e11 * A.e22 - A.e12 * A.e21


def max_abs_diff(A: Mat2c, B: Mat2c) -> float:
    """Largest entrywise modulus of ``A - B``.

    This is the only matrix distance used in the package; all tolerances
    are stated against it.
    """
    return max(
        abs(A.e11 - B.e11),
        abs(A.e12 - B.e12),
        abs(A.e21 - B.e21),
        abs(A.e22 - B.e22),
    )


def max_abs_entry(A: Mat2c) -> float:
    return max(abs(A.e11), abs(A.e12), abs(A.e21), abs(A.e22))
