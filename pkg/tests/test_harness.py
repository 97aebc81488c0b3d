"""Monte Carlo driver: per-trial streams, paired evaluation, aggregation."""

import numpy as np
import pytest

from uavsec.channel import ArrayGeometry, draw_realization
from uavsec.config import SCHEMES, ScenarioConfig
from uavsec.errors import InvalidInputError
from uavsec.harness import (SweepResult, best_phi, build_precoders, run_sweep,
                            run_trial, trial_rng)
from uavsec.metrics import LinkBudget

TINY = ScenarioConfig(n_bs_antennas=8, n_eve_antennas=2, n_users=2, n_trials=4,
                      phi_grid=(0.0, 0.5, 1.0), schemes=("zf_conv", "rzf_conv"),
                      seed=777)


def test_trial_rng_reproducible_and_independent():
    a = trial_rng(42, 3).standard_normal(8)
    b = trial_rng(42, 3).standard_normal(8)
    c = trial_rng(42, 4).standard_normal(8)
    d = trial_rng(43, 3).standard_normal(8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)


def test_build_precoders_every_scheme():
    cfg = ScenarioConfig(n_users=3)
    rng = trial_rng(cfg.seed, 0)
    realization = draw_realization(cfg, rng)
    budget = LinkBudget.from_link_parameters(cfg.tx_power_dbm, cfg.bandwidth_hz,
                                             cfg.noise_figure_db,
                                             cfg.noise_density_dbm_hz)
    tx = ArrayGeometry(cfg.n_bs_antennas, cfg.spacing_over_wavelength)
    for scheme in SCHEMES:
        pset = build_precoders(scheme, realization, 0.5, budget.rho, tx)
        assert pset.scheme_id == scheme
        total = np.sum(np.abs(pset.data) ** 2) + np.sum(np.abs(pset.artificial_noise) ** 2)
        assert np.isclose(total, 1.0, atol=1e-9)


def test_build_precoders_unknown_scheme():
    cfg = ScenarioConfig(n_users=2)
    realization = draw_realization(cfg, trial_rng(cfg.seed, 0))
    tx = ArrayGeometry(cfg.n_bs_antennas, cfg.spacing_over_wavelength)
    with pytest.raises(InvalidInputError):
        build_precoders("mrt", realization, 0.5, 1e11, tx)


def test_run_trial_shapes_and_health():
    rates, fallback, failed = run_trial(TINY, 0)
    assert rates.shape == (2, 3)
    assert fallback.shape == (2, 3)
    assert failed.shape == (2, 3)
    assert not failed.any()
    assert np.all(np.isfinite(rates))
    assert np.all(rates >= 0.0)
    # no data power means no secrecy
    assert np.all(rates[:, 0] == 0.0)


def test_run_sweep_aggregates_per_trial_samples():
    result = run_sweep(TINY)
    assert result.schemes == TINY.schemes
    assert result.phi_grid == TINY.phi_grid
    assert result.per_trial_rates.shape == (4, 2, 3)
    assert np.all(result.valid_counts == 4)
    assert np.all(result.failure_counts == 0)
    assert np.allclose(result.mean_rates, result.per_trial_rates.mean(axis=0), rtol=1e-12)
    expected_se = result.per_trial_rates.std(axis=0, ddof=1) / np.sqrt(4)
    assert np.allclose(result.std_errors, expected_se, rtol=1e-12)


def test_run_sweep_trials_extend_not_reshuffle():
    shorter = run_sweep(TINY)
    longer = run_sweep(ScenarioConfig(**{**TINY.__dict__, "n_trials": 6}))
    assert np.array_equal(longer.per_trial_rates[:4], shorter.per_trial_rates)


def test_run_sweep_worker_count_is_invisible():
    serial = run_sweep(TINY, n_workers=1)
    parallel = run_sweep(TINY, n_workers=2)
    assert np.array_equal(serial.per_trial_rates, parallel.per_trial_rates)
    assert np.array_equal(serial.mean_rates, parallel.mean_rates)


def make_result(rows, schemes=("zf_conv", "rzf_conv"), phi=(0.0, 0.5, 1.0)):
    rows = np.asarray(rows, dtype=float)
    shape = rows.shape
    return SweepResult(schemes=tuple(schemes), phi_grid=tuple(phi), n_trials=5,
                       mean_rates=rows, std_errors=np.zeros(shape),
                       valid_counts=np.full(shape, 5, dtype=int),
                       fallback_counts=np.zeros(shape, dtype=int),
                       failure_counts=np.zeros(shape, dtype=int),
                       per_trial_rates=np.broadcast_to(rows, (5,) + shape))


def test_best_phi_finds_interior_peak():
    result = make_result([[1.0, 2.0, 5.0, 3.0, 0.5], [0.1, 0.2, 0.3, 0.4, 0.5]],
                         phi=(0.0, 0.3, 0.7, 0.9, 1.0))
    assert best_phi(result, "zf_conv") == (0.7, 5.0)
    assert best_phi(result, "rzf_conv") == (1.0, 0.5)


def test_best_phi_tie_goes_to_larger_split():
    result = make_result([[1.0, 2.0, 2.0], [3.0, 1.0, 0.0]])
    assert best_phi(result, "zf_conv") == (1.0, 2.0)
    assert best_phi(result, "rzf_conv") == (0.0, 3.0)


def test_best_phi_rejects_unknown_scheme():
    result = make_result([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]])
    with pytest.raises(InvalidInputError):
        best_phi(result, "nonlinear_socp")


def test_all_cells_valid_flag():
    result = make_result([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]])
    assert result.all_cells_valid
    bad = SweepResult(schemes=result.schemes, phi_grid=result.phi_grid, n_trials=5,
                      mean_rates=result.mean_rates, std_errors=result.std_errors,
                      valid_counts=result.valid_counts,
                      fallback_counts=result.fallback_counts,
                      failure_counts=np.array([[0, 1, 0], [0, 0, 0]]),
                      per_trial_rates=result.per_trial_rates)
    assert not bad.all_cells_valid
