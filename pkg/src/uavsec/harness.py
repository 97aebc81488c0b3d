"""Monte Carlo driver: paired trials over schemes and power splits.

Each trial owns an RNG stream derived from (seed, trial_index), draws
one channel realization, and evaluates every requested scheme at every
power split on that same realization. Trial results land in arrays
indexed by trial, so aggregate numbers do not depend on completion
order and a sweep with more trials extends, rather than reshuffles,
a shorter one.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .channel import ArrayGeometry, ChannelRealization, draw_realization
from .config import ScenarioConfig
from .conventional import PrecoderSet, normalize, nullspace_an, rzf_data, zf_data
from .errors import InvalidInputError, UavsecError
from .eve_aware import dominant_eve_direction, eveaware_precoders, limited_eve_direction
from .metrics import LinkBudget, secrecy_report
from .socp import nonlinear_precoder

__all__ = [
    "SweepResult",
    "trial_rng",
    "build_precoders",
    "run_trial",
    "run_sweep",
    "best_phi",
]


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Independent, reproducible RNG stream for one trial."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,))
    return np.random.default_rng(sequence)


def build_precoders(scheme: str, realization: ChannelRealization, data_fraction: float,
                    rho: float, tx_geometry: ArrayGeometry) -> PrecoderSet:
    """Run one scheme on one realization at one power split."""
    h = realization.user_channels
    he = realization.eve_channel
    k = h.shape[1]
    regularization = k / rho
    if scheme == "zf_conv":
        return normalize(zf_data(h), nullspace_an(h), data_fraction, scheme)
    if scheme == "rzf_conv":
        return normalize(rzf_data(h, regularization), nullspace_an(h), data_fraction, scheme)
    if scheme in ("zf_eve_full", "rzf_eve_full"):
        direction = dominant_eve_direction(he)
        return eveaware_precoders(h, direction, scheme.split("_")[0], regularization,
                                  data_fraction)
    if scheme in ("zf_eve_limited", "rzf_eve_limited"):
        direction = limited_eve_direction(tx_geometry, realization.eve_los_angle)
        return eveaware_precoders(h, direction, scheme.split("_")[0], regularization,
                                  data_fraction)
    if scheme == "nonlinear_socp":
        return nonlinear_precoder(h, he, data_fraction, rho)
    raise InvalidInputError(f"unknown scheme {scheme!r}")


def run_trial(config: ScenarioConfig, trial_index: int):
    """Evaluate every (scheme, split) cell on one shared realization.

    Returns (rates, fallback, failed) arrays of shape
    (len(schemes), len(phi_grid)). A scheme failure marks its cell
    failed without aborting the others.
    """
    rng = trial_rng(config.seed, trial_index)
    realization = draw_realization(config, rng)
    budget = LinkBudget.from_link_parameters(
        config.tx_power_dbm, config.bandwidth_hz, config.noise_figure_db,
        config.noise_density_dbm_hz)
    rho = budget.rho
    tx = ArrayGeometry(config.n_bs_antennas, config.spacing_over_wavelength)

    n_schemes, n_phi = len(config.schemes), len(config.phi_grid)
    rates = np.full((n_schemes, n_phi), np.nan)
    fallback = np.zeros((n_schemes, n_phi), dtype=bool)
    failed = np.zeros((n_schemes, n_phi), dtype=bool)
    for si, scheme in enumerate(config.schemes):
        for pi, split in enumerate(config.phi_grid):
            try:
                precoders = build_precoders(scheme, realization, split, rho, tx)
                report = secrecy_report(realization.user_channels,
                                        realization.eve_channel, precoders, rho)
            except (UavsecError, np.linalg.LinAlgError):
                failed[si, pi] = True
                continue
            rates[si, pi] = report.sum_secrecy_rate
            fallback[si, pi] = precoders.fallback
    return rates, fallback, failed


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Aggregated sweep output plus the per-trial samples behind it.

    mean_rates and std_errors have shape (schemes, phi values) and
    summarize the valid trials of each cell; per_trial_rates keeps the
    raw samples (trial, scheme, phi) with NaN marking failed cells.
    """

    schemes: tuple
    phi_grid: tuple
    n_trials: int
    mean_rates: np.ndarray
    std_errors: np.ndarray
    valid_counts: np.ndarray
    fallback_counts: np.ndarray
    failure_counts: np.ndarray
    per_trial_rates: np.ndarray

    @property
    def all_cells_valid(self) -> bool:
        return bool(np.all(self.failure_counts == 0))


def run_sweep(config: ScenarioConfig, n_workers: int = 1) -> SweepResult:
    """Run all trials and aggregate; results are invariant to n_workers."""
    n_trials = config.n_trials
    shape = (n_trials, len(config.schemes), len(config.phi_grid))
    rates = np.full(shape, np.nan)
    fallback = np.zeros(shape, dtype=bool)
    failed = np.zeros(shape, dtype=bool)

    worker = partial(run_trial, config)
    if n_workers <= 1:
        outputs = map(worker, range(n_trials))
    else:
        pool = ProcessPoolExecutor(max_workers=n_workers)
        outputs = pool.map(worker, range(n_trials),
                           chunksize=max(1, n_trials // (8 * n_workers)))
    for index, (trial_rates, trial_fallback, trial_failed) in enumerate(outputs):
        rates[index] = trial_rates
        fallback[index] = trial_fallback
        failed[index] = trial_failed
    if n_workers > 1:
        pool.shutdown()

    valid = ~failed
    n_valid = valid.sum(axis=0)
    safe = np.maximum(n_valid, 1)
    filled = np.where(valid, rates, 0.0)
    means = filled.sum(axis=0) / safe
    spread = np.where(valid, rates - means[None, :, :], 0.0)
    variance = (spread ** 2).sum(axis=0) / np.maximum(n_valid - 1, 1)
    std_errors = np.sqrt(variance / safe)
    std_errors[n_valid <= 1] = 0.0
    means = np.where(n_valid > 0, means, np.nan)

    return SweepResult(
        schemes=tuple(config.schemes),
        phi_grid=tuple(config.phi_grid),
        n_trials=n_trials,
        mean_rates=means,
        std_errors=std_errors,
        valid_counts=n_valid,
        fallback_counts=fallback.sum(axis=0),
        failure_counts=failed.sum(axis=0),
        per_trial_rates=rates,
    )


def best_phi(result: SweepResult, scheme: str):
    """Power split with the highest mean rate; ties go to the larger split."""
    if scheme not in result.schemes:
        raise InvalidInputError(f"scheme {scheme!r} not present in this sweep")
    row = result.mean_rates[result.schemes.index(scheme)]
    if np.all(np.isnan(row)):
        raise InvalidInputError(f"scheme {scheme!r} has no valid cells")
    reversed_row = row[::-1]
    index = len(row) - 1 - int(np.nanargmax(reversed_row))
    return result.phi_grid[index], float(row[index])
