import math

import numpy as np
import pytest

from eqfid.cloning import shrinking_factor
from eqfid.montecarlo import (
    ANALYTIC_FACTOR,
    BLOCK,
    FULL_MIXED,
    MEASUREMENT,
    UNIFIED_COLLECTIVE,
    UNIFIED_PAIR,
    TrialConfig,
    _mixed_harmonic_expansion,
    _mixed_probability_rows,
    mixed_ensemble_distribution,
    simulate,
    simulate_measurement,
    simulate_unified,
)
from eqfid.povm import outcome_distribution
from eqfid.strategies import p_measurement, p_unified_collective, p_unified_pair


def config(**kw):
    base = dict(n_copies=1, trials=1000, seed=11)
    base.update(kw)
    return TrialConfig(**base)


# --- configuration validation -------------------------------------------

def test_config_rejects_bad_values():
    with pytest.raises(ValueError):
        config(trials=0)
    with pytest.raises(ValueError):
        config(n_copies=0)
    with pytest.raises(ValueError):
        config(seed=-1)
    with pytest.raises(ValueError):
        config(strategy="bogus")
    with pytest.raises(ValueError):
        config(mixed_mode="bogus")
    with pytest.raises(ValueError):
        config(n_copies=13, strategy=UNIFIED_COLLECTIVE, mixed_mode=FULL_MIXED)


def test_config_normalizes_fixed_phases():
    c = config(phase_a=-math.pi / 2, phase_b=7.0 * math.pi)
    assert abs(c.phase_a - 3.0 * math.pi / 2) < 1e-12
    assert abs(c.phase_b - math.pi) < 1e-12


def test_simulators_reject_wrong_strategy():
    with pytest.raises(ValueError):
        simulate_measurement(config(strategy=UNIFIED_PAIR))
    with pytest.raises(ValueError):
        simulate_unified(config(strategy=MEASUREMENT))


# --- deterministic single trial ------------------------------------------

def test_single_trial_at_basis_phase_is_deterministic():
    report = simulate(config(trials=1, phase_a=0.0, phase_b=0.0))
    assert report.mean_overlap_product == 1.0
    assert report.mean_abs_fidelity_error == 0.0
    assert report.overlap_product_se == 0.0
    assert report.tallies == {"ensemble_a": (1, 0), "ensemble_b": (1, 0)}


# --- reproducibility ------------------------------------------------------

def test_identical_config_reproduces_report():
    c = config(n_copies=2, trials=50_000, seed=424242)
    assert simulate(c) == simulate(c)


def test_reproducible_across_block_boundary():
    c = config(trials=BLOCK + 7, seed=9)
    r1, r2 = simulate(c), simulate(c)
    assert r1 == r2
    assert sum(r1.tallies["ensemble_a"]) == BLOCK + 7


def test_different_seeds_differ():
    a = simulate(config(trials=10_000, seed=1))
    b = simulate(config(trials=10_000, seed=2))
    assert a.mean_overlap_product != b.mean_overlap_product


# --- statistical agreement (fixed seeds, deterministic) ------------------

def test_measurement_statistics_three_sigma():
    hits = 0
    for n in (1, 2, 4):
        report = simulate(config(n_copies=n, trials=100_000, seed=5))
        if abs(report.mean_overlap_product - p_measurement(n)) <= 3 * report.overlap_product_se:
            hits += 1
        assert sum(report.tallies["ensemble_a"]) == 100_000
        assert sum(report.tallies["ensemble_b"]) == 100_000
    assert hits >= 2


def test_unified_pair_statistics():
    report = simulate(config(strategy=UNIFIED_PAIR, trials=100_000, seed=3))
    assert abs(report.mean_overlap_product - p_unified_pair(1)) <= 3 * report.overlap_product_se
    assert report.analytic_probability == p_unified_pair(1)
    assert report.perp_probability is None


def test_unified_collective_statistics():
    report = simulate(
        config(strategy=UNIFIED_COLLECTIVE, n_copies=2, trials=100_000, seed=8)
    )
    assert (
        abs(report.mean_overlap_product - p_unified_collective(2))
        <= 3 * report.overlap_product_se
    )
    assert sum(report.tallies["difference"]) == 100_000


def test_report_ranges():
    for strategy in (MEASUREMENT, UNIFIED_PAIR, UNIFIED_COLLECTIVE):
        report = simulate(config(strategy=strategy, n_copies=2, trials=5_000, seed=1))
        assert 0.0 <= report.mean_overlap_product <= 1.0
        assert report.overlap_product_se >= 0.0
        assert report.abs_fidelity_error_se >= 0.0


# --- mixed ensemble distribution ------------------------------------------

def test_mixed_distribution_pure_limit():
    for n in (1, 2, 4, 6):
        for phi in (0.0, 0.9, 3.3):
            p = mixed_ensemble_distribution(n, phi, 1.0)
            assert np.max(np.abs(p[: n + 1] - outcome_distribution(n, phi))) < 1e-10
            assert p[n + 1] < 1e-12


def test_mixed_distribution_fully_depolarized_two_copies():
    p = mixed_ensemble_distribution(2, 0.0, 0.0)
    assert abs(p[3] - 0.25) < 1e-10  # antisymmetric weight of (I/2)^(x)2
    assert np.allclose(p[:3], 0.25, atol=1e-12)


def test_mixed_distribution_total_probability():
    for n in range(1, 7):
        for eta in np.linspace(0.0, 1.0, 6):
            for delta in np.linspace(0.0, 2 * math.pi, 5, endpoint=False):
                p = mixed_ensemble_distribution(n, float(delta), float(eta))
                assert p.min() >= 0.0
                assert abs(p.sum() - 1.0) < 1e-10


def test_mixed_distribution_perp_monotone_in_eta():
    for n in (2, 3, 5):
        for delta in (0.0, 2.2):
            perps = [
                mixed_ensemble_distribution(n, delta, float(e))[n + 1]
                for e in np.linspace(0.0, 1.0, 11)
            ]
            assert all(a >= b - 1e-12 for a, b in zip(perps, perps[1:]))


def test_mixed_distribution_domain_errors():
    with pytest.raises(ValueError):
        mixed_ensemble_distribution(13, 0.0, 0.5)
    with pytest.raises(ValueError):
        mixed_ensemble_distribution(2, 0.0, 1.5)
    with pytest.raises(ValueError):
        mixed_ensemble_distribution(0, 0.0, 0.5)


def test_harmonic_expansion_matches_direct_evaluation():
    for n in (1, 2, 5):
        for eta in (0.2, 0.9):
            coeff_matrix, frequencies = _mixed_harmonic_expansion(n, eta)
            deltas = np.array([0.123, 2.5, 5.9])
            rows = _mixed_probability_rows(deltas, coeff_matrix, frequencies)
            for row, delta in zip(rows, deltas):
                direct = mixed_ensemble_distribution(n, float(delta), eta)
                assert np.max(np.abs(row - direct)) < 1e-10


# --- full-mixed simulation -------------------------------------------------

def test_full_mixed_single_copy_never_leaves_symmetric_space():
    report = simulate(
        config(strategy=UNIFIED_PAIR, mixed_mode=FULL_MIXED, trials=20_000, seed=2)
    )
    assert report.perp_probability == 0.0
    assert report.tallies["difference"][-1] == 0


def test_full_mixed_collective_reports_perp():
    report = simulate(
        config(
            strategy=UNIFIED_COLLECTIVE,
            n_copies=2,
            mixed_mode=FULL_MIXED,
            trials=50_000,
            seed=4,
        )
    )
    assert report.perp_probability is not None
    assert 0.0 < report.perp_probability < 0.5
    assert sum(report.tallies["difference"]) == 50_000
    # no analytic gate factor is applied to the raw empirical mean
    assert 0.0 <= report.mean_overlap_product <= 1.0


def test_full_mixed_sampling_law_at_eta_one_matches_pure():
    # at eta = 1 the sampling rows used by the full-mixed simulator reduce to
    # the pure outcome law (plus an empty perp column)
    for n in (1, 2, 4):
        coeff_matrix, frequencies = _mixed_harmonic_expansion(n, 1.0)
        deltas = np.linspace(0.0, 2 * math.pi, 9, endpoint=False)
        rows = _mixed_probability_rows(deltas, coeff_matrix, frequencies)
        for row, delta in zip(rows, deltas):
            pure = outcome_distribution(n, float(delta))
            assert np.max(np.abs(row[:-1] - pure)) < 1e-10
            assert row[-1] < 1e-10


def test_full_mixed_single_copy_tallies_match_exact_law():
    # N = 1 pair gate: the sampled tallies follow the exact mixed outcome law
    trials = 40_000
    report = simulate(
        config(
            strategy=UNIFIED_PAIR,
            mixed_mode=FULL_MIXED,
            phase_a=0.0,
            phase_b=1.0,
            trials=trials,
            seed=12,
        )
    )
    expected = mixed_ensemble_distribution(1, 1.0, shrinking_factor(1, 2).value)
    counts = report.tallies["difference"]
    for count, p in zip(counts, expected):
        se = math.sqrt(max(p * (1 - p), 1e-12) / trials)
        assert abs(count / trials - p) <= 4 * se


def test_full_mixed_distribution_consistency_at_eta_one():
    eta = shrinking_factor(1, 2).value
    p = mixed_ensemble_distribution(1, 0.0, eta)
    rho_based = np.array(
        [
            0.5 * (1 + eta),  # <Psi_0| rho |Psi_0> at delta = 0
            0.5 * (1 - eta),
        ]
    )
    assert np.max(np.abs(p[:2] - rho_based)) < 1e-12
    assert p[2] < 1e-12  # single qubits never leave the symmetric space
