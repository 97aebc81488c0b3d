"""Linear data precoders and null-space artificial noise.

These schemes use only the legitimate users' channels: zero-forcing
and regularized zero-forcing for the data streams, and an orthonormal
basis of the users' common null space as artificial-noise directions.
Normalization splits a unit transmit budget between data and noise
with a tunable fraction.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePrecoderError, InvalidInputError
from .numerics import hermitian_pd_solve, null_space_basis, pseudo_inverse

__all__ = [
    "PrecoderSet",
    "zf_data",
    "rzf_data",
    "nullspace_an",
    "normalize",
]


@dataclass(frozen=True, eq=False)
class PrecoderSet:
    """Normalized data and artificial-noise precoders for one scheme.

    data: (N, K), column k carries power data_fraction / K.
    artificial_noise: (N, Z) with total power 1 - data_fraction spread
        evenly over the Z columns; Z may be zero.
    data_fraction: share of the unit budget spent on data streams.
    scheme_id: which scheme produced this set.
    fallback: True when an optimizing scheme could not produce a
        solution and a linear substitute was returned instead.
    """

    data: np.ndarray
    artificial_noise: np.ndarray
    data_fraction: float
    scheme_id: str
    fallback: bool = False

    @property
    def n_antennas(self) -> int:
        return self.data.shape[0]

    @property
    def n_users(self) -> int:
        return self.data.shape[1]


def zf_data(user_channels: np.ndarray) -> np.ndarray:
    """Unnormalized zero-forcing directions, the pseudoinverse of H^H.

    For a full-column-rank H this inverts the multiuser channel exactly
    (H^H W = I); if H is rank deficient the shared rank cutoff yields
    the minimum-norm compromise instead of blowing up.
    """
    h = np.asarray(user_channels, dtype=np.complex128)
    return pseudo_inverse(h.conj().T)


def rzf_data(user_channels: np.ndarray, regularization: float) -> np.ndarray:
    """Unnormalized regularized zero-forcing directions (H H^H + b I)^{-1} H."""
    h = np.asarray(user_channels, dtype=np.complex128)
    if not np.isfinite(regularization) or regularization < 0:
        raise InvalidInputError(f"regularization must be finite and >= 0, got {regularization}")
    n = h.shape[0]
    gram = h @ h.conj().T + regularization * np.eye(n)
    return hermitian_pd_solve(gram, h)


def nullspace_an(user_channels: np.ndarray) -> np.ndarray:
    """Orthonormal artificial-noise directions invisible to every user.

    Returns an (N, Z) basis of the common null space of the user
    channels, Z = N - rank(H); all columns satisfy h_u^H v = 0.
    """
    h = np.asarray(user_channels, dtype=np.complex128)
    return null_space_basis(h.conj().T)


def normalize(data_directions: np.ndarray, an_directions: np.ndarray,
              data_fraction: float, scheme_id: str,
              fallback: bool = False) -> PrecoderSet:
    """Scale raw directions onto the unit power budget.

    Data column k gets power data_fraction / K, each artificial-noise
    column gets (1 - data_fraction) / Z. A zero direction with a
    nonzero budget is unrecoverable and raises.
    """
    w = np.asarray(data_directions, dtype=np.complex128)
    v = np.asarray(an_directions, dtype=np.complex128)
    if w.ndim != 2 or v.ndim != 2 or v.shape[0] != w.shape[0]:
        raise InvalidInputError("precoder direction matrices must share the antenna dimension")
    if not np.isfinite(data_fraction) or not 0.0 <= data_fraction <= 1.0:
        raise InvalidInputError(f"data_fraction must lie in [0, 1], got {data_fraction}")

    k = w.shape[1]
    data_budget = data_fraction / k if k else 0.0
    col_power = np.sum(np.abs(w) ** 2, axis=0)
    if data_budget > 0.0 and np.any(col_power == 0.0):
        raise DegeneratePrecoderError("zero data direction cannot carry a nonzero power budget")
    if data_budget == 0.0:
        w_scaled = np.zeros_like(w)
    else:
        w_scaled = w * np.sqrt(data_budget / col_power)

    z = v.shape[1]
    an_budget = (1.0 - data_fraction) / z if z else 0.0
    if z:
        an_power = np.sum(np.abs(v) ** 2, axis=0)
        if an_budget > 0.0 and np.any(an_power == 0.0):
            raise DegeneratePrecoderError("zero noise direction cannot carry a nonzero power budget")
        if an_budget == 0.0:
            v_scaled = np.zeros_like(v)
        else:
            v_scaled = v * np.sqrt(an_budget / an_power)
    else:
        v_scaled = v.copy()

    return PrecoderSet(data=w_scaled, artificial_noise=v_scaled,
                       data_fraction=float(data_fraction), scheme_id=scheme_id,
                       fallback=fallback)
