"""Geometry sampling and multipath channel synthesis for an aerial downlink.

The transmitter is a vertical uniform linear array on a hovering
platform; ground nodes see it under an elevation angle set by their
horizontal distance and the platform altitude. Channels combine a
small number of specular paths whose departure angles scatter around
the line-of-sight elevation with a Laplacian profile, scaled by a
free-space-like distance/frequency path loss.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "ArrayGeometry",
    "NodePlacement",
    "MultipathParams",
    "ChannelRealization",
    "steering_vector",
    "path_loss_db",
    "path_loss_amplitude",
    "sample_placement",
    "sample_angles",
    "sample_gains",
    "multipath_vector",
    "multipath_matrix",
    "user_channel",
    "eve_channel",
    "draw_realization",
]


@dataclass(frozen=True)
class ArrayGeometry:
    """Uniform linear array: element count and spacing in wavelengths."""

    n_elements: int
    spacing_over_wavelength: float = 0.5

    def __post_init__(self):
        if self.n_elements < 1:
            raise InvalidInputError(f"n_elements must be >= 1, got {self.n_elements}")
        if not np.isfinite(self.spacing_over_wavelength) or self.spacing_over_wavelength <= 0:
            raise InvalidInputError(
                f"spacing_over_wavelength must be positive, got {self.spacing_over_wavelength}")


@dataclass(frozen=True)
class NodePlacement:
    """Ground node position relative to the platform.

    horizontal_distance_m and altitude_m define the slant path; the
    line-of-sight elevation angle is atan2(altitude, distance).
    """

    horizontal_distance_m: float
    altitude_m: float

    def __post_init__(self):
        d, h = self.horizontal_distance_m, self.altitude_m
        if not (np.isfinite(d) and np.isfinite(h)) or d < 0 or h < 0:
            raise InvalidInputError(f"distance and altitude must be finite and >= 0, got ({d}, {h})")
        if d == 0 and h == 0:
            raise InvalidInputError("node cannot be colocated with the array")

    @property
    def slant_distance_m(self) -> float:
        return float(np.hypot(self.horizontal_distance_m, self.altitude_m))

    @property
    def los_angle(self) -> float:
        """Line-of-sight elevation seen from the array, radians."""
        return float(np.arctan2(self.altitude_m, self.horizontal_distance_m))


@dataclass(frozen=True, eq=False)
class MultipathParams:
    """Per-path complex gains and angles for one link.

    arrival_angles is None for single-antenna receivers.
    """

    gains: np.ndarray
    departure_angles: np.ndarray
    arrival_angles: np.ndarray | None = None

    def __post_init__(self):
        g = np.asarray(self.gains)
        d = np.asarray(self.departure_angles)
        if g.ndim != 1 or d.shape != g.shape or g.size < 1:
            raise InvalidInputError("gains and departure_angles must be equal-length 1-D arrays")
        if self.arrival_angles is not None and np.asarray(self.arrival_angles).shape != g.shape:
            raise InvalidInputError("arrival_angles must match gains in length")

    @property
    def n_paths(self) -> int:
        return int(np.asarray(self.gains).size)


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """One Monte Carlo draw of every link in the scenario.

    user_channels: (N, K) with column k the channel of user k.
    eve_channel: (N, M) transmit-by-receive matrix of the eavesdropper.
    eve_los_angle: elevation of the eavesdropper's line of sight, the
        only eavesdropper-side quantity available under limited CSI.
    """

    user_channels: np.ndarray
    eve_channel: np.ndarray
    user_placements: tuple[NodePlacement, ...]
    eve_placement: NodePlacement
    eve_los_angle: float


def steering_vector(geometry: ArrayGeometry, angle: float) -> np.ndarray:
    """Unit-norm array response of a vertical ULA at elevation `angle`."""
    if not np.isfinite(angle):
        raise InvalidInputError(f"angle must be finite, got {angle}")
    n = geometry.n_elements
    phase = -2j * np.pi * geometry.spacing_over_wavelength * np.sin(angle)
    return np.exp(phase * np.arange(n)) / np.sqrt(n)


def _steering_matrix(geometry: ArrayGeometry, angles: np.ndarray) -> np.ndarray:
    # columns are steering vectors, one per angle
    n = geometry.n_elements
    phases = np.outer(np.arange(n), np.sin(angles))
    return np.exp(-2j * np.pi * geometry.spacing_over_wavelength * phases) / np.sqrt(n)


def path_loss_db(horizontal_distance_m: float, altitude_m: float, carrier_ghz: float) -> float:
    """Urban-microcell style line-of-sight path loss over the slant range."""
    if not np.isfinite(carrier_ghz) or carrier_ghz <= 0:
        raise InvalidInputError(f"carrier_ghz must be positive, got {carrier_ghz}")
    d_los = np.hypot(horizontal_distance_m, altitude_m)
    if not np.isfinite(d_los) or d_los <= 0:
        raise InvalidInputError(f"slant distance must be positive, got {d_los}")
    return float(32.4 + 21.0 * np.log10(d_los) + 20.0 * np.log10(carrier_ghz))


def path_loss_amplitude(horizontal_distance_m: float, altitude_m: float, carrier_ghz: float) -> float:
    """Amplitude-domain path loss factor, 10**(PL_dB / 20)."""
    return float(10.0 ** (path_loss_db(horizontal_distance_m, altitude_m, carrier_ghz) / 20.0))


def sample_placement(rng: np.random.Generator, d_min_m: float, d_max_m: float,
                     altitude_m: float) -> NodePlacement:
    """Draw a node at a uniform horizontal distance in [d_min, d_max]."""
    if not (np.isfinite(d_min_m) and np.isfinite(d_max_m)) or d_min_m < 0 or d_max_m < d_min_m:
        raise InvalidInputError(f"need 0 <= d_min <= d_max, got [{d_min_m}, {d_max_m}]")
    distance = float(rng.uniform(d_min_m, d_max_m))
    return NodePlacement(horizontal_distance_m=distance, altitude_m=altitude_m)


def sample_angles(rng: np.random.Generator, center_angle: float, spread_deg: float,
                  n_paths: int) -> np.ndarray:
    """Laplacian-distributed angles around a center, inverse-CDF sampled.

    The scale is chosen so the distribution's standard deviation equals
    spread_deg. Zero spread collapses every path onto the center.
    """
    if not np.isfinite(spread_deg) or spread_deg < 0:
        raise InvalidInputError(f"spread_deg must be >= 0, got {spread_deg}")
    if n_paths < 1:
        raise InvalidInputError(f"n_paths must be >= 1, got {n_paths}")
    scale = np.deg2rad(spread_deg) / np.sqrt(2.0)
    u = rng.random(n_paths)
    # map the measure-zero draw u == 0 to the median; keeps log1p finite
    u = np.where(u == 0.0, 0.5, u) - 0.5
    offsets = -scale * np.sign(u) * np.log1p(-2.0 * np.abs(u))
    return center_angle + offsets


def sample_gains(rng: np.random.Generator, shape) -> np.ndarray:
    """Unit-variance circularly symmetric complex Gaussian gains."""
    real = rng.standard_normal(shape)
    imag = rng.standard_normal(shape)
    return (real + 1j * imag) / np.sqrt(2.0)


def multipath_vector(multipath: MultipathParams, geometry: ArrayGeometry) -> np.ndarray:
    """Path-loss-free channel vector sqrt(N / L) * sum_l g_l a(theta_l)."""
    n, L = geometry.n_elements, multipath.n_paths
    a = _steering_matrix(geometry, np.asarray(multipath.departure_angles))
    return np.sqrt(n / L) * (a @ np.asarray(multipath.gains, dtype=np.complex128))


def multipath_matrix(multipath: MultipathParams, tx_geometry: ArrayGeometry,
                     rx_geometry: ArrayGeometry) -> np.ndarray:
    """Path-loss-free MIMO channel sqrt(N M / L) * sum_l g_l a_tx(theta_l) a_rx(psi_l)^H."""
    if multipath.arrival_angles is None:
        raise InvalidInputError("multipath must carry arrival_angles for a MIMO link")
    n, m, L = tx_geometry.n_elements, rx_geometry.n_elements, multipath.n_paths
    a_tx = _steering_matrix(tx_geometry, np.asarray(multipath.departure_angles))
    a_rx = _steering_matrix(rx_geometry, np.asarray(multipath.arrival_angles))
    gains = np.asarray(multipath.gains, dtype=np.complex128)
    return np.sqrt(n * m / L) * ((a_tx * gains) @ a_rx.conj().T)


def user_channel(placement: NodePlacement, multipath: MultipathParams,
                 geometry: ArrayGeometry, carrier_ghz: float) -> np.ndarray:
    """Channel vector of a single-antenna ground user, (N,)."""
    pl = path_loss_amplitude(placement.horizontal_distance_m, placement.altitude_m, carrier_ghz)
    return multipath_vector(multipath, geometry) / pl


def eve_channel(placement: NodePlacement, multipath: MultipathParams,
                tx_geometry: ArrayGeometry, rx_geometry: ArrayGeometry,
                carrier_ghz: float) -> np.ndarray:
    """Channel matrix of the multi-antenna eavesdropper, (N, M)."""
    pl = path_loss_amplitude(placement.horizontal_distance_m, placement.altitude_m, carrier_ghz)
    return multipath_matrix(multipath, tx_geometry, rx_geometry) / pl


def draw_realization(config, rng: np.random.Generator) -> ChannelRealization:
    """Draw every link of one Monte Carlo trial in a fixed order.

    The draw order is part of the reproducibility contract: user
    distances, eavesdropper distance, the independent distance that
    sets the eavesdropper's receive-side angle center, user gains,
    user departure angles, then the eavesdropper's gains and angles.
    """
    tx = ArrayGeometry(config.n_bs_antennas, config.spacing_over_wavelength)
    rx = ArrayGeometry(config.n_eve_antennas, config.spacing_over_wavelength)
    k, L = config.n_users, config.n_paths
    h = config.uav_altitude_m

    distances = rng.uniform(config.d_min_m, config.d_max_m, size=k)
    eve_distance = float(rng.uniform(config.d_min_m, config.d_max_m))
    eve_rx_distance = float(rng.uniform(config.d_min_m, config.d_max_m))

    user_gains = sample_gains(rng, (k, L))
    placements = tuple(NodePlacement(float(d), h) for d in distances)
    columns = []
    for u, placement in enumerate(placements):
        angles = sample_angles(rng, placement.los_angle, config.angle_spread_deg, L)
        mp = MultipathParams(gains=user_gains[u], departure_angles=angles)
        columns.append(user_channel(placement, mp, tx, config.carrier_ghz))
    user_matrix = np.stack(columns, axis=1)

    eve_placement = NodePlacement(eve_distance, h)
    eve_rx_center = NodePlacement(eve_rx_distance, h).los_angle
    eve_gains = sample_gains(rng, L)
    eve_departures = sample_angles(rng, eve_placement.los_angle, config.angle_spread_deg, L)
    eve_arrivals = sample_angles(rng, eve_rx_center, config.angle_spread_deg, L)
    eve_mp = MultipathParams(gains=eve_gains, departure_angles=eve_departures,
                             arrival_angles=eve_arrivals)
    eve_matrix = eve_channel(eve_placement, eve_mp, tx, rx, config.carrier_ghz)

    return ChannelRealization(
        user_channels=user_matrix,
        eve_channel=eve_matrix,
        user_placements=placements,
        eve_placement=eve_placement,
        eve_los_angle=eve_placement.los_angle,
    )
