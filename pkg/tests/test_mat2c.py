import math

from hypothesis import given

from eulermat import (
    Mat2c,
    diag,
    identity,
    make_t,
    mat_add,
    mat_det,
    mat_mul,
    mat_scale,
    max_abs_diff,
    phi_dense,
    psi_dense,
    to_dense,
    zero,
)

from conftest import complexes, matrices

A = Mat2c(1 + 2j, -3 + 0.5j, 0.25j, 4 - 1j)


def test_mul_identity():
    assert mat_mul(identity(), A) == A
    assert mat_mul(A, identity()) == A


def test_mul_phi_squares_to_minus_identity():
    P = phi_dense(1.0)
    assert mat_mul(P, P) == Mat2c(-1, 0, 0, -1)


def test_mul_psi_squares_to_alpha_squared():
    P = psi_dense(2.0)
    assert mat_mul(P, P) == diag(4, 4)


def test_add():
    assert mat_add(A, zero()) == A
    assert mat_add(identity(), identity()) == diag(2, 2)
    lhs = mat_add(to_dense(make_t(1, 0, 1)), to_dense(make_t(0, 1, 1)))
    assert lhs == to_dense(make_t(1, 1, 1))


def test_scale():
    assert mat_scale(1, A) == A
    assert mat_scale(0, A) == zero()
    for alpha in (0.5, 1.0, 3.0):
        assert mat_scale(-1j, phi_dense(alpha)) == psi_dense(alpha)


def test_det():
    assert mat_det(identity()) == 1
    assert mat_det(to_dense(make_t(1, 1, 2))) == 5
    assert mat_det(phi_dense(1.0)) == 1


def test_max_abs_diff():
    assert max_abs_diff(A, A) == 0
    assert max_abs_diff(identity(), zero()) == 1
    assert math.isclose(max_abs_diff(phi_dense(1.0), psi_dense(1.0)), math.sqrt(2),
                        rel_tol=1e-15)


def test_operators_match_functions():
    B = Mat2c(2, 1j, -1, 0.5)
    assert A @ B == mat_mul(A, B)
    assert A + B == mat_add(A, B)
    assert (2j) * A == mat_scale(2j, A)


def test_from_rows_round_trip():
    assert Mat2c.from_rows(A.rows()) == A


@given(matrices(), matrices(), matrices())
def test_associativity(X, Y, Z):
    assert max_abs_diff(mat_mul(mat_mul(X, Y), Z), mat_mul(X, mat_mul(Y, Z))) <= 1e-12


@given(matrices(1.0), matrices(1.0), matrices(1.0))
def test_associativity_unit_entries(X, Y, Z):
    assert max_abs_diff(mat_mul(mat_mul(X, Y), Z), mat_mul(X, mat_mul(Y, Z))) <= 1e-12


@given(matrices(), matrices())
def test_det_multiplicative(X, Y):
    lhs = mat_det(mat_mul(X, Y))
    rhs = mat_det(X) * mat_det(Y)
    assert abs(lhs - rhs) <= 1e-10 * (abs(rhs) + 1)


@given(complexes(), matrices(), matrices())
def test_scale_distributes(c, X, Y):
    lhs = mat_scale(c, mat_add(X, Y))
    rhs = mat_add(mat_scale(c, X), mat_scale(c, Y))
    assert max_abs_diff(lhs, rhs) <= 1e-13


@given(matrices(), matrices(), matrices())
def test_metric(X, Y, Z):
    assert max_abs_diff(X, Y) == max_abs_diff(Y, X)
    assert max_abs_diff(X, X) == 0
    assert max_abs_diff(X, Z) <= max_abs_diff(X, Y) + max_abs_diff(Y, Z) + 1e-15
