"""Deterministic linear-algebra kernels: SVD, pseudoinverse, null space, solves."""

import numpy as np
import pytest

from uavsec.errors import InvalidInputError, NumericalError
from uavsec.numerics import hermitian_pd_solve, null_space_basis, pseudo_inverse, svd

from conftest import complex_randn


@pytest.mark.parametrize("shape", [(5, 3), (3, 5), (4, 4), (1, 6), (6, 1)])
def test_svd_reconstructs_input(rng, shape):
    a = complex_randn(rng, *shape)
    result = svd(a)
    assert np.allclose(result.reconstruct(), a, atol=1e-12)


def test_svd_factors_are_unitary(rng):
    a = complex_randn(rng, 6, 4)
    res = svd(a)
    assert np.allclose(res.left_vectors.conj().T @ res.left_vectors, np.eye(6), atol=1e-12)
    assert np.allclose(res.right_vectors.conj().T @ res.right_vectors, np.eye(4), atol=1e-12)
    assert np.all(np.diff(res.singular_values) <= 1e-15)


def test_svd_phase_convention_pins_leading_entries(rng):
    a = complex_randn(rng, 5, 5)
    res = svd(a)
    for col in res.left_vectors.T:
        lead = col[np.argmax(np.abs(col))]
        assert abs(lead.imag) < 1e-12 and lead.real > 0


def test_svd_is_reproducible(rng):
    a = complex_randn(rng, 7, 3)
    r1, r2 = svd(a), svd(a.copy())
    assert np.array_equal(r1.left_vectors, r2.left_vectors)
    assert np.array_equal(r1.right_vectors, r2.right_vectors)
    assert np.array_equal(r1.singular_values, r2.singular_values)


def test_svd_global_phase_leaves_spectrum(rng):
    a = complex_randn(rng, 4, 6)
    rotated = np.exp(1j * 0.83) * a
    assert np.allclose(svd(a).singular_values, svd(rotated).singular_values, rtol=1e-12)


def test_svd_rank_detection(rng):
    u = complex_randn(rng, 6)
    v = complex_randn(rng, 4)
    assert svd(np.outer(u, v.conj())).rank == 1
    assert svd(complex_randn(rng, 6, 3)).rank == 3


def test_svd_rejects_bad_input(rng):
    with pytest.raises(InvalidInputError):
        svd(np.ones(4))
    with pytest.raises(InvalidInputError):
        svd(np.array([[1.0, np.nan]]))


def test_pseudo_inverse_matches_reference(rng):
    a = complex_randn(rng, 6, 3)
    pinv = pseudo_inverse(a)
    assert np.allclose(pinv, np.linalg.pinv(a), atol=1e-12)
    assert np.allclose(a @ pinv @ a, a, atol=1e-12)


def test_pseudo_inverse_short_fat(rng):
    a = complex_randn(rng, 3, 8)
    pinv = pseudo_inverse(a)
    # right inverse of a full-row-rank matrix
    assert np.allclose(a @ pinv, np.eye(3), atol=1e-12)


def test_null_space_annihilates_and_is_orthonormal(rng):
    a = complex_randn(rng, 4, 9)    # maps C^9 -> C^4
    basis = null_space_basis(a)
    assert basis.shape == (9, 5)
    assert np.max(np.abs(a @ basis)) < 1e-12
    assert np.allclose(basis.conj().T @ basis, np.eye(5), atol=1e-12)


def test_null_space_of_full_rank_square_is_empty(rng):
    a = complex_randn(rng, 5, 5)
    assert null_space_basis(a).shape == (5, 0)


def test_hermitian_solve_rank_one_update(rng):
    # A = I + h h^H has the closed-form solution A^{-1} h = h / (1 + |h|^2)
    h = complex_randn(rng, 7)
    a = np.eye(7) + np.outer(h, h.conj())
    x = hermitian_pd_solve(a, h)
    assert np.allclose(x, h / (1.0 + np.linalg.norm(h) ** 2), atol=1e-12)


def test_hermitian_solve_matrix_rhs(rng):
    a = complex_randn(rng, 5, 5)
    spd = a @ a.conj().T + 2.0 * np.eye(5)
    b = complex_randn(rng, 5, 3)
    x = hermitian_pd_solve(spd, b)
    assert np.allclose(spd @ x, b, atol=1e-10)


def test_hermitian_solve_rejects_indefinite():
    bad = np.diag([1.0, -1.0])
    with pytest.raises(NumericalError):
        hermitian_pd_solve(bad, np.ones(2))
