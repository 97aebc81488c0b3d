"""Linear precoders that treat the eavesdropper as a virtual extra user.

The user channel matrix is augmented with one eavesdropper-side
direction; running ZF or RZF on the augmented matrix yields data
precoders that avoid that direction and a single artificial-noise
column aimed straight at it. The direction comes either from the
eavesdropper's full channel (dominant left singular vector) or, with
limited knowledge, from the array response at its line-of-sight
elevation only.
"""

from dataclasses import dataclass

import numpy as np

from .channel import ArrayGeometry, steering_vector
from .conventional import PrecoderSet, normalize
from .errors import DegenerateChannelError, InvalidInputError
from .numerics import hermitian_pd_solve, pseudo_inverse, svd

__all__ = [
    "EveDirection",
    "dominant_eve_direction",
    "limited_eve_direction",
    "eveaware_precoders",
]

FULL_CSI = "full_csi"
LIMITED_CSI = "limited_csi"


@dataclass(frozen=True, eq=False)
class EveDirection:
    """Unit-norm transmit-side direction attributed to the eavesdropper."""

    vector: np.ndarray
    mode: str

    def __post_init__(self):
        v = np.asarray(self.vector)
        if v.ndim != 1 or v.size < 1:
            raise InvalidInputError("direction must be a 1-D vector")
        if self.mode not in (FULL_CSI, LIMITED_CSI):
            raise InvalidInputError(f"unknown direction mode {self.mode!r}")


def dominant_eve_direction(eve_channel: np.ndarray) -> EveDirection:
    """Transmit direction with the largest gain toward the eavesdropper.

    The dominant left singular vector of the (N, M) eavesdropper
    channel; deterministic through the shared phase convention.
    """
    he = np.asarray(eve_channel, dtype=np.complex128)
    if not np.any(he != 0):
        raise DegenerateChannelError("eavesdropper channel has no energy, no direction exists")
    result = svd(he)
    return EveDirection(vector=result.left_vectors[:, 0], mode=FULL_CSI)


def limited_eve_direction(geometry: ArrayGeometry, eve_los_angle: float) -> EveDirection:
    """Array response at the eavesdropper's line-of-sight elevation.

    The only direction constructible when just the eavesdropper's
    position, not its channel, is known.
    """
    return EveDirection(vector=steering_vector(geometry, eve_los_angle), mode=LIMITED_CSI)


def eveaware_precoders(user_channels: np.ndarray, eve_direction: EveDirection,
                       variant: str, regularization: float,
                       data_fraction: float) -> PrecoderSet:
    """ZF or RZF on the user channels augmented by one eavesdropper direction.

    The first K columns of the augmented solution become the data
    precoders, the last column becomes the single artificial-noise
    direction; both are then scaled onto the unit power budget.
    """
    h = np.asarray(user_channels, dtype=np.complex128)
    if h.ndim != 2:
        raise InvalidInputError("user_channels must be an (N, K) matrix")
    d = np.asarray(eve_direction.vector, dtype=np.complex128)
    if d.shape != (h.shape[0],):
        raise InvalidInputError("eavesdropper direction does not match the antenna count")

    augmented = np.concatenate([h, d[:, None]], axis=1)
    if variant == "zf":
        solution = pseudo_inverse(augmented.conj().T)
    elif variant == "rzf":
        if not np.isfinite(regularization) or regularization < 0:
            raise InvalidInputError(
                f"regularization must be finite and >= 0, got {regularization}")
        n = augmented.shape[0]
        gram = augmented @ augmented.conj().T + regularization * np.eye(n)
        solution = hermitian_pd_solve(gram, augmented)
    else:
        raise InvalidInputError(f"unknown variant {variant!r}, expected 'zf' or 'rzf'")

    k = h.shape[1]
    csi_tag = "full" if eve_direction.mode == FULL_CSI else "limited"
    scheme_id = f"{variant}_eve_{csi_tag}"
    return normalize(solution[:, :k], solution[:, k:k + 1], data_fraction, scheme_id)
