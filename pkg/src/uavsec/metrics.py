"""Link budget, per-user SINR, eavesdropper SINR, and secrecy rates.

The transmit side works on a unit power budget; the absolute scale
enters only through the transmit-power-to-noise ratio rho, so every
SINR uses 1 / rho as its effective noise term. The eavesdropper is
scored under an MMSE receive combiner, the best any linear receiver
can do against the artificial noise plus thermal noise covariance.
"""

from dataclasses import dataclass

import numpy as np

from .conventional import PrecoderSet
from .errors import InvalidInputError
from .numerics import hermitian_pd_solve

__all__ = [
    "LinkBudget",
    "SinrReport",
    "user_sinr",
    "eve_sinr",
    "secrecy_rate",
    "secrecy_report",
]


@dataclass(frozen=True)
class LinkBudget:
    """Absolute powers of the link and the ratio the SINRs depend on."""

    tx_power_dbm: float
    noise_power_dbm: float

    @classmethod
    def from_link_parameters(cls, tx_power_dbm: float, bandwidth_hz: float,
                             noise_figure_db: float,
                             noise_density_dbm_hz: float = -174.0) -> "LinkBudget":
        if not np.isfinite(bandwidth_hz) or bandwidth_hz <= 0:
            raise InvalidInputError(f"bandwidth_hz must be positive, got {bandwidth_hz}")
        noise = noise_density_dbm_hz + 10.0 * np.log10(bandwidth_hz) + noise_figure_db
        return cls(tx_power_dbm=float(tx_power_dbm), noise_power_dbm=float(noise))

    @property
    def rho_db(self) -> float:
        return self.tx_power_dbm - self.noise_power_dbm

    @property
    def rho(self) -> float:
        """Transmit power over noise power, linear scale."""
        return float(10.0 ** (self.rho_db / 10.0))


@dataclass(frozen=True, eq=False)
class SinrReport:
    """Per-user SINRs on both sides plus the resulting secrecy rates."""

    user_sinr: np.ndarray
    eve_sinr: np.ndarray
    secrecy_rates: np.ndarray

    @property
    def sum_secrecy_rate(self) -> float:
        return float(np.sum(self.secrecy_rates))


def _check_rho(rho: float):
    if not np.isfinite(rho) or rho <= 0:
        raise InvalidInputError(f"rho must be positive and finite, got {rho}")


def _all_user_sinr(user_channels: np.ndarray, precoders: PrecoderSet, rho: float) -> np.ndarray:
    h = np.asarray(user_channels, dtype=np.complex128)
    cross = h.conj().T @ precoders.data
    power = np.abs(cross) ** 2
    signal = np.diag(power).copy()
    interference = power.sum(axis=1) - signal
    v = precoders.artificial_noise
    if v.shape[1]:
        interference = interference + np.sum(np.abs(h.conj().T @ v) ** 2, axis=1)
    return signal / (interference + 1.0 / rho)


def _all_eve_sinr(eve_channel: np.ndarray, precoders: PrecoderSet, rho: float) -> np.ndarray:
    he = np.asarray(eve_channel, dtype=np.complex128)
    m = he.shape[1]
    received = he.conj().T @ precoders.data
    v = precoders.artificial_noise
    covariance = np.eye(m) / rho
    if v.shape[1]:
        leak = he.conj().T @ v
        covariance = covariance + leak @ leak.conj().T
    solved = hermitian_pd_solve(covariance, received)
    return np.real(np.sum(np.conj(received) * solved, axis=0))


def user_sinr(user_index: int, user_channels: np.ndarray, precoders: PrecoderSet,
              rho: float) -> float:
    """SINR of one user: own stream over other streams, noise leak, and 1/rho."""
    _check_rho(rho)
    h = np.asarray(user_channels, dtype=np.complex128)
    if not 0 <= user_index < h.shape[1]:
        raise InvalidInputError(f"user_index {user_index} out of range for K={h.shape[1]}")
    hu = h[:, user_index]
    gains = hu.conj() @ precoders.data
    signal = np.abs(gains[user_index]) ** 2
    interference = float(np.sum(np.abs(gains) ** 2) - signal)
    v = precoders.artificial_noise
    if v.shape[1]:
        interference += float(np.sum(np.abs(hu.conj() @ v) ** 2))
    return float(signal / (interference + 1.0 / rho))


def eve_sinr(user_index: int, eve_channel: np.ndarray, precoders: PrecoderSet,
             rho: float) -> float:
    """Eavesdropper's MMSE-combined SINR on user `user_index`'s stream.

    Evaluates b^H (C + I/rho)^{-1} b with b the received stream
    signature and C the artificial-noise covariance at the receiver;
    no linear combiner can exceed this value.
    """
    _check_rho(rho)
    he = np.asarray(eve_channel, dtype=np.complex128)
    if not 0 <= user_index < precoders.n_users:
        raise InvalidInputError(f"user_index {user_index} out of range for K={precoders.n_users}")
    return float(_all_eve_sinr(he, precoders, rho)[user_index])


def secrecy_rate(user_sinr_value: float, eve_sinr_value: float) -> float:
    """Nonnegative gap between the user's and the eavesdropper's rates."""
    rate = np.log2(1.0 + user_sinr_value) - np.log2(1.0 + eve_sinr_value)
    return float(max(0.0, rate))


def secrecy_report(user_channels: np.ndarray, eve_channel: np.ndarray,
                   precoders: PrecoderSet, rho: float) -> SinrReport:
    """Evaluate every user's SINR, the eavesdropper's take, and secrecy rates."""
    _check_rho(rho)
    h = np.asarray(user_channels, dtype=np.complex128)
    he = np.asarray(eve_channel, dtype=np.complex128)
    if h.shape[0] != precoders.n_antennas or he.shape[0] != precoders.n_antennas:
        raise InvalidInputError("channel and precoder antenna dimensions disagree")
    su = _all_user_sinr(h, precoders, rho)
    se = _all_eve_sinr(he, precoders, rho)
    rates = np.maximum(0.0, np.log2(1.0 + su) - np.log2(1.0 + se))
    return SinrReport(user_sinr=su, eve_sinr=se, secrecy_rates=rates)
