"""Complex linear-algebra kernels with one shared rank convention.

All decompositions here are deterministic: the same input bits produce
the same output bits, and singular vectors carry a fixed phase
convention (the largest-magnitude entry of each left vector is made
real and positive) so that directions extracted from them are
reproducible across call sites.
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg as _sla

from .errors import InvalidInputError, NumericalError

__all__ = [
    "SvdResult",
    "svd",
    "pseudo_inverse",
    "null_space_basis",
    "hermitian_pd_solve",
]


def _as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise InvalidInputError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InvalidInputError(f"{name} must have positive dimensions, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains NaN or Inf entries")
    return arr


def _rank_cutoff(singular_values: np.ndarray, shape: tuple[int, int]) -> float:
    # same convention as LAPACK-style rcond: eps * max(m, n) * sigma_max
    if singular_values.size == 0:
        return 0.0
    eps = np.finfo(np.float64).eps
    return eps * max(shape) * float(singular_values[0])


def _align_column_phases(u: np.ndarray, v: np.ndarray, n_paired: int):
    """Rotate singular-vector columns to the fixed phase convention.

    Paired columns (u_l, v_l) are rotated together so u_l v_l^H is
    unchanged; surplus columns of either factor are rotated on their
    own. The convention: the largest-magnitude entry of each u column
    (of each surplus v column) becomes real and positive.
    """
    def leading_rotations(mat):
        idx = np.argmax(np.abs(mat), axis=0)
        lead = mat[idx, np.arange(mat.shape[1])]
        mag = np.abs(lead)
        safe = np.where(mag > 0.0, mag, 1.0)
        return np.where(mag > 0.0, np.conj(lead) / safe, 1.0)

    rot_u = leading_rotations(u)
    u = u * rot_u
    if v.shape[1] > 0:
        rot_v = np.ones(v.shape[1], dtype=np.complex128)
        m = min(n_paired, v.shape[1], rot_u.size)
        rot_v[:m] = rot_u[:m]
        if v.shape[1] > m:
            rot_v[m:] = leading_rotations(v[:, m:])
        v = v * rot_v
    return u, v


@dataclass(frozen=True, eq=False)
class SvdResult:
    """Full singular value decomposition with an explicit rank decision.

    singular_values: (min(m, n),) nonnegative, descending.
    left_vectors: (m, m) unitary, phase-normalized columns.
    right_vectors: (n, n) unitary; column l pairs with left column l
        for l < min(m, n).
    rank: number of singular values above the cutoff
        eps * max(m, n) * sigma_max.
    """

    singular_values: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        k = self.singular_values.size
        u = self.left_vectors[:, :k]
        v = self.right_vectors[:, :k]
        return (u * self.singular_values) @ v.conj().T


def svd(matrix) -> SvdResult:
    """Deterministic full SVD with the shared phase and rank conventions."""
    a = _as_complex_matrix(matrix)
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=True)
    except np.linalg.LinAlgError as exc:  # no convergence on pathological input
        raise NumericalError(f"SVD failed to converge: {exc}") from exc
    v = vh.conj().T
    u, v = _align_column_phases(u, v, n_paired=s.size)
    cutoff = _rank_cutoff(s, a.shape)
    rank = int(np.count_nonzero(s > cutoff))
    return SvdResult(singular_values=s, left_vectors=u, right_vectors=v, rank=rank)


def pseudo_inverse(matrix) -> np.ndarray:
    """Moore-Penrose inverse with the shared rank cutoff.

    Small singular values (sigma <= eps * max(m, n) * sigma_max) are
    treated as zero, so rank-deficient inputs get the minimum-norm
    inverse instead of an explosion.
    """
    a = _as_complex_matrix(matrix)
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD failed to converge: {exc}") from exc
    cutoff = _rank_cutoff(s, a.shape)
    inv = np.where(s > cutoff, 1.0 / np.where(s > 0.0, s, 1.0), 0.0)
    return (vh.conj().T * inv) @ u.conj().T


def null_space_basis(matrix) -> np.ndarray:
    """Orthonormal basis of the right null space {x : A x = 0}.

    Returns an (n, z) matrix with z = n - rank(A); z may be zero.
    Columns are right singular vectors for singular values at or below
    the rank cutoff, phase-normalized for determinism.
    """
    a = _as_complex_matrix(matrix)
    result = svd(a)
    return result.right_vectors[:, result.rank:]


def hermitian_pd_solve(matrix, rhs) -> np.ndarray:
    """Solve A X = B for Hermitian positive definite A via Cholesky.

    Raises NumericalError when the factorization breaks down, which is
    the signal that A is not (numerically) positive definite.
    """
    a = _as_complex_matrix(matrix, name="lhs")
    if a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"lhs must be square, got {a.shape}")
    b = np.asarray(rhs, dtype=np.complex128)
    if b.ndim not in (1, 2):
        raise InvalidInputError(f"rhs must be 1-D or 2-D, got ndim={b.ndim}")
    if b.shape[0] != a.shape[0]:
        raise InvalidInputError(
            f"rhs rows {b.shape[0]} do not match lhs dimension {a.shape[0]}")
    if not np.all(np.isfinite(b)):
        raise InvalidInputError("rhs contains NaN or Inf entries")
    try:
        factor = _sla.cho_factor(a, lower=False, check_finite=False)
    except _sla.LinAlgError as exc:
        raise NumericalError(f"Cholesky factorization failed: {exc}") from exc
    return _sla.cho_solve(factor, b, check_finite=False)
