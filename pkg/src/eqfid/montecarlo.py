"""Seeded Monte Carlo simulation of the fidelity-estimation strategies.

Reproducibility contract
------------------------
All randomness comes from a counter-based Philox stream keyed by the seed.
Trial i consumes exactly the four uniform draws at stream positions
4i .. 4i+3, so the randomness of a trial depends only on (seed, trial index)
and never on how trials are batched across blocks or workers. Outcome tallies
are exact integers and every real accumulation goes through exactly rounded
summation (math.fsum), which is independent of summation order; identical
(seed, config) pairs therefore produce bit-identical reports.

Per-trial uniform layout (columns of the draw matrix):
  0  phase of ensemble a (ignored when the phase is fixed)
  1  phase of ensemble b (ignored when the phase is fixed)
  2  measurement outcome for ensemble a, or for the difference ensemble
  3  measurement outcome for ensemble b (measurement strategy), or the
     fallback phase estimate when a full-mixed trial lands outside the
     symmetric subspace (unified strategies); unused otherwise
"""

import math
from dataclasses import dataclass

import numpy as np

from .cloning import cnot_fidelity, gcnot_fidelity, shrinking_factor
from .numerics import TWO_PI, as_phase, clone_state
from .povm import estimate_phase, povm_basis
from .strategies import p_measurement, p_unified_collective, p_unified_pair
from .symmetric import EMBEDDING_CAP, dicke_embedding, symmetric_state

MEASUREMENT = "measurement"
UNIFIED_PAIR = "unified-pair"
UNIFIED_COLLECTIVE = "unified-collective"
STRATEGIES = (MEASUREMENT, UNIFIED_PAIR, UNIFIED_COLLECTIVE)

ANALYTIC_FACTOR = "analytic"
FULL_MIXED = "full"
MIXED_MODES = (ANALYTIC_FACTOR, FULL_MIXED)

DRAWS_PER_TRIAL = 4
BLOCK = 1 << 16


@dataclass(frozen=True)
class TrialConfig:
    """Configuration of one simulation run; phases of None mean uniform."""

    n_copies: int
    trials: int
    seed: int
    phase_a: float | None = None
    phase_b: float | None = None
    strategy: str = MEASUREMENT
    mixed_mode: str = ANALYTIC_FACTOR

    def __post_init__(self):
        if self.n_copies < 1:
            raise ValueError("n_copies must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.mixed_mode not in MIXED_MODES:
            raise ValueError(f"unknown mixed mode {self.mixed_mode!r}")
        if self.mixed_mode == FULL_MIXED and self.n_copies > EMBEDDING_CAP:
            raise ValueError(
                f"full-mixed simulation capped at n_copies <= {EMBEDDING_CAP}"
            )
        for name in ("phase_a", "phase_b"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_phase(v).value)


@dataclass(frozen=True)
class TrialReport:
    """Summary statistics of one simulation run.

    mean_overlap_product estimates the strategy's success probability (with
    the analytic gate factor already applied in analytic mode); tallies hold
    exact outcome counts per measured register, each summing to trials.
    perp_probability is the observed frequency of trials outside the
    symmetric subspace and is only set in full-mixed mode.
    """

    strategy: str
    n_copies: int
    trials: int
    seed: int
    mixed_mode: str
    mean_overlap_product: float
    overlap_product_se: float
    mean_abs_fidelity_error: float
    abs_fidelity_error_se: float
    tallies: dict[str, tuple[int, ...]]
    analytic_probability: float
    perp_probability: float | None = None

    def as_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "n_copies": self.n_copies,
            "trials": self.trials,
            "seed": self.seed,
            "mixed_mode": self.mixed_mode,
            "mean_overlap_product": self.mean_overlap_product,
            "overlap_product_se": self.overlap_product_se,
            "mean_abs_fidelity_error": self.mean_abs_fidelity_error,
            "abs_fidelity_error_se": self.abs_fidelity_error_se,
            "tallies": {k: list(v) for k, v in self.tallies.items()},
            "analytic_probability": self.analytic_probability,
            "perp_probability": self.perp_probability,
        }


def mixed_ensemble_distribution(n_copies: int, delta, eta_value: float) -> np.ndarray:
    """Outcome law of the phase measurement on N independent shrunk copies.

    The product state rho(delta, eta)^{(x) N} lives in the full 2^N space, so
    each projector is embedded through the Dicke isometry and applied matrix
    free, one qubit factor at a time. Returns n_copies + 2 entries: outcomes
    k = 0 .. N followed by the probability of landing outside the symmetric
    subspace, where the phase measurement is undefined. Entries are clamped
    at zero and sum to one.
    """
    if n_copies < 1:
        raise ValueError("n_copies must be >= 1")
    if n_copies > EMBEDDING_CAP:
        raise ValueError(f"full-space evaluation capped at n_copies <= {EMBEDDING_CAP}")
    if not 0.0 <= eta_value <= 1.0:
        raise ValueError(f"shrinking factor must lie in [0, 1], got {eta_value}")
    rho = clone_state(delta, eta_value).matrix
    emb = dicke_embedding(n_copies).astype(complex)
    basis = povm_basis(n_copies)
    p = np.empty(n_copies + 2)
    for k in range(n_copies + 1):
        w = emb @ basis[:, k]
        p[k] = np.real(np.vdot(w, _apply_to_each_qubit(rho, w, n_copies)))
    p[: n_copies + 1] = np.clip(p[: n_copies + 1], 0.0, None)
    p[n_copies + 1] = max(0.0, 1.0 - p[: n_copies + 1].sum())
    return p


def _apply_to_each_qubit(rho: np.ndarray, vec: np.ndarray, n_copies: int) -> np.ndarray:
    """Apply rho^{(x) N} to a 2^N vector one tensor factor at a time."""
    v = vec.reshape((2,) * n_copies)
    for axis in range(n_copies):
        v = np.moveaxis(np.tensordot(rho, v, axes=([1], [axis])), 0, axis)
    return v.reshape(-1)


def simulate(config: TrialConfig) -> TrialReport:
    """Dispatch to the simulator matching config.strategy."""
    if config.strategy == MEASUREMENT:
        return simulate_measurement(config)
    return simulate_unified(config)


def simulate_measurement(config: TrialConfig) -> TrialReport:
    """Strategy 1: sample one phase measurement per ensemble and score the
    product of the two reconstruction overlaps.

    Per trial, outcomes k_a and k_b are drawn from the exact outcome laws at
    the (fixed or uniform) true phases; the trial value is
    cos^2((est_a - phi_a)/2) * cos^2((est_b - phi_b)/2) and the fidelity
    error is |F_hat - F| with F_hat computed from the estimated phases. With
    uniform phases the mean trial value converges to p_measurement(N).
    """
    if config.strategy != MEASUREMENT:
        raise ValueError(f"simulate_measurement got strategy {config.strategy!r}")
    n = config.n_copies
    weights = np.abs(symmetric_state(n, 0.0))
    basis_conj = povm_basis(n).conj()
    estimates = np.array([estimate_phase(k, n) for k in range(n + 1)])
    ns = np.arange(n + 1)

    values = np.empty(config.trials)
    errors = np.empty(config.trials)
    tally_a = np.zeros(n + 1, dtype=np.int64)
    tally_b = np.zeros(n + 1, dtype=np.int64)

    for start, draws in _uniform_blocks(config.seed, config.trials):
        stop = start + len(draws)
        phi_a = _block_phases(draws[:, 0], config.phase_a)
        phi_b = _block_phases(draws[:, 1], config.phase_b)
        k_a = _sample_rows(_pure_probability_rows(phi_a, weights, basis_conj, ns), draws[:, 2])
        k_b = _sample_rows(_pure_probability_rows(phi_b, weights, basis_conj, ns), draws[:, 3])
        est_a = estimates[k_a]
        est_b = estimates[k_b]
        values[start:stop] = (
            np.cos((est_a - phi_a) / 2.0) ** 2 * np.cos((est_b - phi_b) / 2.0) ** 2
        )
        errors[start:stop] = np.abs(
            np.cos((est_b - est_a) / 2.0) ** 2 - np.cos((phi_b - phi_a) / 2.0) ** 2
        )
        tally_a += np.bincount(k_a, minlength=n + 1)
        tally_b += np.bincount(k_b, minlength=n + 1)

    mean, se = _mean_and_se(values)
    err_mean, err_se = _mean_and_se(errors)
    return TrialReport(
        strategy=config.strategy,
        n_copies=n,
        trials=config.trials,
        seed=config.seed,
        mixed_mode=config.mixed_mode,
        mean_overlap_product=mean,
        overlap_product_se=se,
        mean_abs_fidelity_error=err_mean,
        abs_fidelity_error_se=err_se,
        tallies={"ensemble_a": tuple(tally_a.tolist()), "ensemble_b": tuple(tally_b.tolist())},
        analytic_probability=p_measurement(n),
    )


def simulate_unified(config: TrialConfig) -> TrialReport:
    """Strategies 2b/3: difference gate followed by phase estimation.

    Analytic mode samples the phase measurement on the pure difference state
    (one N-copy round) and multiplies the mean reconstruction overlap by the
    analytic gate factor, reproducing the strategy probability in
    expectation. Full-mixed mode instead samples the exact outcome law of
    the shrunk N-copy product state in the 2^N space; trials that land
    outside the symmetric subspace record a uniformly random phase estimate
    and are counted in perp_probability, and no gate factor is applied.
    """
    if config.strategy not in (UNIFIED_PAIR, UNIFIED_COLLECTIVE):
        raise ValueError(f"simulate_unified got strategy {config.strategy!r}")
    n = config.n_copies
    if config.strategy == UNIFIED_PAIR:
        gate_eta = shrinking_factor(1, 2).value
        gate_factor = cnot_fidelity()
        analytic = p_unified_pair(n)
    else:
        gate_eta = shrinking_factor(n, 2 * n).value
        gate_factor = gcnot_fidelity(n)
        analytic = p_unified_collective(n)

    full = config.mixed_mode == FULL_MIXED
    weights = np.abs(symmetric_state(n, 0.0))
    basis_conj = povm_basis(n).conj()
    estimates = np.array([estimate_phase(k, n) for k in range(n + 1)])
    ns = np.arange(n + 1)
    if full:
        coeff_matrix, frequencies = _mixed_harmonic_expansion(n, gate_eta)

    n_slots = n + 2 if full else n + 1
    values = np.empty(config.trials)
    errors = np.empty(config.trials)
    tally = np.zeros(n_slots, dtype=np.int64)

    for start, draws in _uniform_blocks(config.seed, config.trials):
        stop = start + len(draws)
        phi_a = _block_phases(draws[:, 0], config.phase_a)
        phi_b = _block_phases(draws[:, 1], config.phase_b)
        delta = (phi_b - phi_a) % TWO_PI
        if full:
            rows = _mixed_probability_rows(delta, coeff_matrix, frequencies)
        else:
            rows = _pure_probability_rows(delta, weights, basis_conj, ns)
        k = _sample_rows(rows, draws[:, 2])
        est = np.where(k <= n, estimates[np.minimum(k, n)], TWO_PI * draws[:, 3])
        values[start:stop] = np.cos((est - delta) / 2.0) ** 2
        errors[start:stop] = np.abs(np.cos(est / 2.0) ** 2 - np.cos(delta / 2.0) ** 2)
        tally += np.bincount(k, minlength=n_slots)

    mean, se = _mean_and_se(values)
    err_mean, err_se = _mean_and_se(errors)
    if not full:
        mean *= gate_factor
        se *= gate_factor
    return TrialReport(
        strategy=config.strategy,
        n_copies=n,
        trials=config.trials,
        seed=config.seed,
        mixed_mode=config.mixed_mode,
        mean_overlap_product=mean,
        overlap_product_se=se,
        mean_abs_fidelity_error=err_mean,
        abs_fidelity_error_se=err_se,
        tallies={"difference": tuple(tally.tolist())},
        analytic_probability=analytic,
        perp_probability=(tally[-1] / config.trials) if full else None,
    )


def _uniform_blocks(seed: int, trials: int):
    """Yield (start, draws) blocks; draw j of trial i is stream item 4i+j."""
    rng = np.random.Generator(np.random.Philox(seed))
    done = 0
    while done < trials:
        b = min(BLOCK, trials - done)
        yield done, rng.random((b, DRAWS_PER_TRIAL))
        done += b


def _block_phases(column: np.ndarray, fixed: float | None) -> np.ndarray:
    if fixed is None:
        return TWO_PI * column
    return np.full(len(column), fixed)


def _pure_probability_rows(phis, weights, basis_conj, ns) -> np.ndarray:
    """Outcome probabilities of the pure-state phase measurement, one row
    per trial phase."""
    c = weights * np.exp(1j * np.outer(phis, ns))
    return np.clip(np.abs(c @ basis_conj) ** 2, 0.0, None)


def _mixed_harmonic_expansion(n_copies: int, eta_value: float):
    """Fourier data reproducing mixed_ensemble_distribution at any phase.

    The outcome law is shift covariant: p_k(delta) = q(delta - est_k) where q
    is a trigonometric polynomial of degree N, so sampling q at 2N+1 phases
    recovers it exactly. Returns (coeff_matrix, frequencies) with
    coeff_matrix[f, k] = a_f e^{-i f est_k}; the probability rows are then
    Re(e^{i delta f} @ coeff_matrix).
    """
    m = 2 * n_copies + 1
    xs = TWO_PI * np.arange(m) / m
    q = np.array([mixed_ensemble_distribution(n_copies, x, eta_value)[0] for x in xs])
    coeffs = np.fft.fft(q) / m
    frequencies = np.where(np.arange(m) <= n_copies, np.arange(m), np.arange(m) - m)
    estimates = np.array([estimate_phase(k, n_copies) for k in range(n_copies + 1)])
    coeff_matrix = coeffs[:, None] * np.exp(-1j * np.outer(frequencies, estimates))
    return coeff_matrix, frequencies


def _mixed_probability_rows(deltas, coeff_matrix, frequencies) -> np.ndarray:
    """Mixed outcome probabilities (with trailing perp column), one row per
    trial phase difference."""
    basis = np.exp(1j * np.outer(deltas, frequencies))
    p = np.clip(np.real(basis @ coeff_matrix), 0.0, None)
    perp = np.clip(1.0 - p.sum(axis=1), 0.0, None)
    return np.concatenate([p, perp[:, None]], axis=1)


def _sample_rows(probability_rows: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    """Inverse-CDF sample of one categorical outcome per row."""
    cdf = np.cumsum(probability_rows, axis=1)
    k = (cdf < uniforms[:, None]).sum(axis=1)
    return np.minimum(k, probability_rows.shape[1] - 1)


def _mean_and_se(values: np.ndarray) -> tuple[float, float]:
    """Exactly rounded mean and standard error of the mean."""
    n = len(values)
    total = math.fsum(values.tolist())
    mean = total / n
    if n < 2:
        return mean, 0.0
    square_total = math.fsum((values * values).tolist())
    variance = max(0.0, (square_total - n * mean * mean) / (n - 1))
    return mean, math.sqrt(variance / n)
