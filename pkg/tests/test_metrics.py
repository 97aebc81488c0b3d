"""Link budget arithmetic, SINRs on both sides, and secrecy rates."""

import numpy as np
import pytest

from uavsec.conventional import PrecoderSet
from uavsec.errors import InvalidInputError
from uavsec.metrics import (LinkBudget, eve_sinr, secrecy_rate, secrecy_report,
                            user_sinr)

from conftest import complex_randn


def make_set(w, v, phi=0.5):
    return PrecoderSet(data=w, artificial_noise=v, data_fraction=phi, scheme_id="t")


def test_link_budget_reference_numbers():
    budget = LinkBudget.from_link_parameters(30.0, 1e8, 9.0)
    assert np.isclose(budget.noise_power_dbm, -85.0, atol=1e-12)
    assert np.isclose(budget.rho_db, 115.0, atol=1e-12)
    assert np.isclose(budget.rho, 10.0 ** 11.5, rtol=1e-12)


def test_link_budget_validates_bandwidth():
    with pytest.raises(InvalidInputError):
        LinkBudget.from_link_parameters(30.0, 0.0, 9.0)


def test_single_user_sinr_closed_form(rng):
    # one user, no noise precoding: SINR = rho * phi * |h|^2
    h = complex_randn(rng, 8, 1)
    phi, rho = 0.7, 10.0 ** 11.5
    w = np.sqrt(phi) * h / np.linalg.norm(h)
    pre = make_set(w, np.zeros((8, 0), dtype=complex), phi)
    expected = rho * phi * np.linalg.norm(h) ** 2
    assert np.isclose(user_sinr(0, h, pre, rho), expected, rtol=1e-12)


def test_user_sinr_matches_direct_formula(rng):
    h = complex_randn(rng, 8, 3)
    w = complex_randn(rng, 8, 3) * 0.2
    v = complex_randn(rng, 8, 2) * 0.1
    rho = 100.0
    pre = make_set(w, v)
    for u in range(3):
        hu = h[:, u]
        signal = abs(np.vdot(hu, w[:, u])) ** 2
        interference = sum(abs(np.vdot(hu, w[:, j])) ** 2 for j in range(3) if j != u)
        leak = np.sum(np.abs(hu.conj() @ v) ** 2)
        expected = signal / (interference + leak + 1.0 / rho)
        assert np.isclose(user_sinr(u, h, pre, rho), expected, rtol=1e-12)


def test_eve_sinr_no_an_reduces_to_matched_filter(rng):
    # with white noise only, the best combiner collects rho * |b|^2
    he = complex_randn(rng, 8, 4)
    w = complex_randn(rng, 8, 2) * 0.3
    rho = 50.0
    pre = make_set(w, np.zeros((8, 0), dtype=complex))
    b = he.conj().T @ w[:, 0]
    assert np.isclose(eve_sinr(0, he, pre, rho), rho * np.linalg.norm(b) ** 2, rtol=1e-10)


def test_eve_sinr_matches_quadratic_form(rng):
    he = complex_randn(rng, 8, 4)
    w = complex_randn(rng, 8, 3) * 0.2
    v = complex_randn(rng, 8, 5) * 0.2
    rho = 200.0
    pre = make_set(w, v)
    leak = he.conj().T @ v
    cov = leak @ leak.conj().T + np.eye(4) / rho
    for u in range(3):
        b = he.conj().T @ w[:, u]
        expected = float(np.real(b.conj() @ np.linalg.solve(cov, b)))
        assert np.isclose(eve_sinr(u, he, pre, rho), expected, rtol=1e-10)


def test_eve_sinr_dominates_random_combiners(rng):
    he = complex_randn(rng, 6, 4)
    w = complex_randn(rng, 6, 2) * 0.5
    v = complex_randn(rng, 6, 3) * 0.4
    rho = 80.0
    pre = make_set(w, v)
    value = eve_sinr(1, he, pre, rho)
    b = he.conj().T @ w[:, 1]
    cov = (he.conj().T @ v) @ (he.conj().T @ v).conj().T + np.eye(4) / rho
    combiners = complex_randn(rng, 500, 4)
    combiners /= np.linalg.norm(combiners, axis=1, keepdims=True)
    num = np.abs(combiners.conj() @ b) ** 2
    den = np.real(np.einsum("ij,jk,ik->i", combiners.conj(), cov, combiners))
    assert np.all(num / den <= value * (1 + 1e-9))


def test_secrecy_rate_clamps(rng):
    assert secrecy_rate(3.0, 1.0) == pytest.approx(np.log2(4.0) - np.log2(2.0))
    assert secrecy_rate(1.0, 3.0) == 0.0


def test_secrecy_report_aggregates(rng):
    h = complex_randn(rng, 8, 3)
    he = complex_randn(rng, 8, 4)
    w = complex_randn(rng, 8, 3) * 0.2
    v = complex_randn(rng, 8, 2) * 0.2
    pre = make_set(w, v)
    rho = 120.0
    report = secrecy_report(h, he, pre, rho)
    assert report.user_sinr.shape == (3,)
    for u in range(3):
        expected = secrecy_rate(user_sinr(u, h, pre, rho), eve_sinr(u, he, pre, rho))
        assert np.isclose(report.secrecy_rates[u], expected, rtol=1e-12)
    assert np.isclose(report.sum_secrecy_rate, np.sum(report.secrecy_rates))
    assert np.all(report.secrecy_rates >= 0)
