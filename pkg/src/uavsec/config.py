"""Scenario configuration: defaults, validation, JSON round-trip.

The default scenario is a 16-element vertical array on a platform
hovering at 100 m over an urban microcell at 28 GHz, serving users
drawn uniformly between 10 m and 100 m horizontal distance, with a
4-antenna eavesdropper, 5 paths per link, and a 10 degree angle
spread. Transmission uses 30 dBm over 100 MHz with a 9 dB receiver
noise figure.
"""

import json
from dataclasses import dataclass, fields

from .errors import ConfigError

__all__ = [
    "SCHEMES",
    "ScenarioConfig",
    "config_to_dict",
    "config_from_dict",
    "parse_config",
    "write_config",
]

# canonical scheme order used everywhere results are reported
SCHEMES = (
    "zf_conv",
    "rzf_conv",
    "zf_eve_full",
    "rzf_eve_full",
    "zf_eve_limited",
    "rzf_eve_limited",
    "nonlinear_socp",
)


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything a sweep needs; every field has a validated default."""

    n_bs_antennas: int = 16
    n_eve_antennas: int = 4
    n_users: int = 4
    d_min_m: float = 10.0
    d_max_m: float = 100.0
    uav_altitude_m: float = 100.0
    carrier_ghz: float = 28.0
    bandwidth_hz: float = 1e8
    noise_figure_db: float = 9.0
    noise_density_dbm_hz: float = -174.0
    tx_power_dbm: float = 30.0
    spacing_over_wavelength: float = 0.5
    n_paths: int = 5
    angle_spread_deg: float = 10.0
    phi_grid: tuple = tuple(i / 10 for i in range(11))
    n_trials: int = 500
    seed: int = 1234
    schemes: tuple = SCHEMES

    def __post_init__(self):
        def fail(key, message):
            raise ConfigError(f"config key '{key}': {message}")

        for key in ("n_bs_antennas", "n_eve_antennas", "n_users", "n_paths", "n_trials"):
            value = getattr(self, key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                fail(key, f"must be an integer >= 1, got {value!r}")
        for key in ("d_min_m", "d_max_m", "uav_altitude_m", "carrier_ghz", "bandwidth_hz",
                    "angle_spread_deg", "spacing_over_wavelength", "tx_power_dbm",
                    "noise_figure_db", "noise_density_dbm_hz"):
            value = getattr(self, key)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                fail(key, f"must be a number, got {value!r}")
            if value != value or value in (float("inf"), float("-inf")):
                fail(key, "must be finite")
        if self.d_min_m < 0 or self.d_max_m < self.d_min_m:
            fail("d_min_m", f"need 0 <= d_min_m <= d_max_m, got [{self.d_min_m}, {self.d_max_m}]")
        if self.uav_altitude_m <= 0:
            fail("uav_altitude_m", f"must be > 0, got {self.uav_altitude_m}")
        if self.carrier_ghz <= 0:
            fail("carrier_ghz", f"must be > 0, got {self.carrier_ghz}")
        if self.bandwidth_hz <= 0:
            fail("bandwidth_hz", f"must be > 0, got {self.bandwidth_hz}")
        if self.spacing_over_wavelength <= 0:
            fail("spacing_over_wavelength", f"must be > 0, got {self.spacing_over_wavelength}")
        if self.angle_spread_deg < 0:
            fail("angle_spread_deg", f"must be >= 0, got {self.angle_spread_deg}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            fail("seed", f"must be a nonnegative integer, got {self.seed!r}")

        grid = tuple(self.phi_grid)
        if not grid:
            fail("phi_grid", "must not be empty")
        for value in grid:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                fail("phi_grid", f"entries must be numbers, got {value!r}")
            if not 0.0 <= value <= 1.0:
                fail("phi_grid", f"entries must lie in [0, 1], got {value}")
        object.__setattr__(self, "phi_grid", tuple(float(v) for v in grid))

        schemes = tuple(self.schemes)
        if not schemes:
            fail("schemes", "must not be empty")
        for scheme in schemes:
            if scheme not in SCHEMES:
                fail("schemes", f"unknown scheme {scheme!r}, expected one of {list(SCHEMES)}")
        if len(set(schemes)) != len(schemes):
            fail("schemes", "contains duplicates")
        object.__setattr__(self, "schemes", schemes)


def config_to_dict(config: ScenarioConfig) -> dict:
    """JSON-ready dictionary with the same keys as the dataclass fields."""
    out = {}
    for field in fields(ScenarioConfig):
        value = getattr(config, field.name)
        out[field.name] = list(value) if isinstance(value, tuple) else value
    return out


def config_from_dict(data: dict, source: str = "config") -> ScenarioConfig:
    """Build a config from a dictionary, rejecting unknown keys."""
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: expected a JSON object, got {type(data).__name__}")
    known = {field.name for field in fields(ScenarioConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"{source}: unknown key '{unknown[0]}'"
                          + (f" (and {len(unknown) - 1} more)" if len(unknown) > 1 else ""))
    kwargs = dict(data)
    for key in ("phi_grid", "schemes"):
        if key in kwargs:
            value = kwargs[key]
            if not isinstance(value, (list, tuple)):
                raise ConfigError(f"config key '{key}': must be a list, got {value!r}")
            kwargs[key] = tuple(value)
    return ScenarioConfig(**kwargs)


def parse_config(path) -> ScenarioConfig:
    """Load and validate a JSON configuration file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data, source=str(path))


def write_config(config: ScenarioConfig, path) -> None:
    """Serialize to JSON so that parse_config reads back an equal config."""
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(config_to_dict(config), handle, indent=2, sort_keys=True)
        handle.write("\n")
