"""Zero-forcing / regularized data precoders and null-space artificial noise."""

import numpy as np
import pytest

from uavsec.conventional import PrecoderSet, normalize, nullspace_an, rzf_data, zf_data
from uavsec.errors import DegeneratePrecoderError

from conftest import complex_randn


def test_zf_removes_cross_interference(rng):
    h = complex_randn(rng, 16, 4)
    w = zf_data(h)
    gains = h.conj().T @ w
    assert np.max(np.abs(gains - np.diag(np.diag(gains)))) < 1e-10
    assert np.allclose(np.diag(gains), 1.0, atol=1e-10)


def test_zf_single_user_closed_form(rng):
    h = complex_randn(rng, 8, 1)
    w = zf_data(h)
    assert np.allclose(w, h / np.linalg.norm(h) ** 2, atol=1e-12)


def test_rzf_matches_direct_formula(rng):
    h = complex_randn(rng, 12, 5)
    beta = 0.31
    ref = np.linalg.solve(h @ h.conj().T + beta * np.eye(12), h)
    assert np.allclose(rzf_data(h, beta), ref, atol=1e-11)


def test_rzf_small_regularization_approaches_zf(rng):
    h = complex_randn(rng, 10, 3)
    w = rzf_data(h, 1e-12)
    gains = h.conj().T @ w
    off = gains - np.diag(np.diag(gains))
    assert np.max(np.abs(off)) < 1e-9


def test_nullspace_an_properties(rng):
    h = complex_randn(rng, 16, 4)
    v = nullspace_an(h)
    assert v.shape == (16, 12)
    assert np.max(np.abs(h.conj().T @ v)) < 1e-12
    assert np.allclose(v.conj().T @ v, np.eye(12), atol=1e-12)


def test_nullspace_an_empty_when_overloaded(rng):
    h = complex_randn(rng, 4, 9)
    assert nullspace_an(h).shape == (4, 0)


def test_normalize_power_split(rng):
    w_dir = complex_randn(rng, 16, 4)
    v_dir = complex_randn(rng, 16, 12)
    phi = 0.35
    pre = normalize(w_dir, v_dir, phi, "zf_conv")
    col_power = np.sum(np.abs(pre.data) ** 2, axis=0)
    assert np.allclose(col_power, phi / 4, atol=1e-14)
    an_power = np.sum(np.abs(pre.artificial_noise) ** 2, axis=0)
    assert np.allclose(an_power, (1 - phi) / 12, atol=1e-14)
    assert np.isclose(np.sum(np.abs(pre.data) ** 2), phi, atol=1e-12)
    assert np.isclose(np.sum(np.abs(pre.artificial_noise) ** 2), 1 - phi, atol=1e-12)
    assert pre.scheme_id == "zf_conv" and not pre.fallback
    assert pre.n_antennas == 16 and pre.n_users == 4


def test_normalize_is_positively_homogeneous(rng):
    # scaling any input column cannot change the output: each column is
    # renormalized onto its power share anyway
    w_dir = complex_randn(rng, 8, 3)
    v_dir = complex_randn(rng, 8, 5)
    base = normalize(w_dir, v_dir, 0.6, "zf_conv")
    w_scaled = w_dir.copy()
    w_scaled[:, 1] *= 37.0
    v_scaled = v_dir.copy()
    v_scaled[:, 0] *= 0.002
    scaled = normalize(w_scaled, v_scaled, 0.6, "zf_conv")
    assert np.allclose(scaled.data, base.data, atol=1e-12)
    assert np.allclose(scaled.artificial_noise, base.artificial_noise, atol=1e-12)


def test_normalize_extreme_splits(rng):
    w_dir = complex_randn(rng, 8, 2)
    v_dir = complex_randn(rng, 8, 6)
    all_an = normalize(w_dir, v_dir, 0.0, "s")
    assert np.all(all_an.data == 0)
    assert np.isclose(np.sum(np.abs(all_an.artificial_noise) ** 2), 1.0)
    all_data = normalize(w_dir, v_dir, 1.0, "s")
    assert np.all(all_data.artificial_noise == 0)
    assert np.isclose(np.sum(np.abs(all_data.data) ** 2), 1.0)


def test_normalize_empty_an_block(rng):
    # more users than antennas: no null space left for artificial noise
    w_dir = complex_randn(rng, 4, 6)
    pre = normalize(w_dir, np.zeros((4, 0), dtype=complex), 0.7, "rzf_conv")
    assert pre.artificial_noise.shape == (4, 0)
    assert np.isclose(np.sum(np.abs(pre.data) ** 2), 0.7)


def test_normalize_rejects_zero_column(rng):
    w_dir = complex_randn(rng, 6, 3)
    w_dir[:, 1] = 0.0
    with pytest.raises(DegeneratePrecoderError):
        normalize(w_dir, complex_randn(rng, 6, 3), 0.5, "s")


def test_precoder_set_is_plain_container(rng):
    data = complex_randn(rng, 5, 2)
    an = complex_randn(rng, 5, 3)
    pre = PrecoderSet(data=data, artificial_noise=an, data_fraction=0.4, scheme_id="x")
    assert pre.n_antennas == 5 and pre.n_users == 2
