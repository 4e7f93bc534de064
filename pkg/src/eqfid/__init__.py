"""Fidelity-estimation strategies for finite ensembles of equatorial qubits.

Closed-form strategy probabilities, exact measurement simulation and seeded
Monte Carlo validation for comparing how well the fidelity between two
ensembles of identically prepared equatorial qubit states can be
reconstructed.
"""

from .cloning import (
    ShrinkingFactor,
    TransformationOutput,
    cnot_fidelity,
    cnot_output,
    eqcm_fidelity,
    gcnot_fidelity,
    gcnot_output,
    shrinking_factor,
    shrinking_factor_limit,
)
from .montecarlo import (
    ANALYTIC_FACTOR,
    FULL_MIXED,
    MEASUREMENT,
    UNIFIED_COLLECTIVE,
    UNIFIED_PAIR,
    TrialConfig,
    TrialReport,
    mixed_ensemble_distribution,
    simulate,
    simulate_measurement,
    simulate_unified,
)
from .numerics import (
    EquatorialState,
    Phase,
    QubitDensityMatrix,
    as_phase,
    binom,
    binomial_row,
    clone_state,
    equatorial_state,
    overlap,
    pure_fidelity,
    sqrt_binom_sum,
    sqrt_binom_sum_scaled,
)
from .povm import (
    estimate_phase,
    mean_fidelity_closed,
    mean_fidelity_numeric,
    outcome_distribution,
    povm_basis,
)
from .strategies import (
    PhaseInfoTradeoff,
    StrategyCurvePoint,
    curve_table,
    other_ensemble_tradeoff,
    p_cloning,
    p_measurement,
    p_unified_collective,
    p_unified_collective_unequal,
    p_unified_pair,
)
from .symmetric import dicke_embedding, symmetric_state
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "ANALYTIC_FACTOR",
    "CheckResult",
    "EquatorialState",
    "FULL_MIXED",
    "MEASUREMENT",
    "Phase",
    "PhaseInfoTradeoff",
    "QubitDensityMatrix",
    "ShrinkingFactor",
    "StrategyCurvePoint",
    "TransformationOutput",
    "TrialConfig",
    "TrialReport",
    "UNIFIED_COLLECTIVE",
    "UNIFIED_PAIR",
    "as_phase",
    "binom",
    "binomial_row",
    "clone_state",
    "cnot_fidelity",
    "cnot_output",
    "curve_table",
    "dicke_embedding",
    "eqcm_fidelity",
    "equatorial_state",
    "estimate_phase",
    "gcnot_fidelity",
    "gcnot_output",
    "mean_fidelity_closed",
    "mean_fidelity_numeric",
    "mixed_ensemble_distribution",
    "other_ensemble_tradeoff",
    "outcome_distribution",
    "overlap",
    "p_cloning",
    "p_measurement",
    "p_unified_collective",
    "p_unified_collective_unequal",
    "p_unified_pair",
    "povm_basis",
    "pure_fidelity",
    "run_checks",
    "shrinking_factor",
    "shrinking_factor_limit",
    "simulate",
    "simulate_measurement",
    "simulate_unified",
    "sqrt_binom_sum",
    "sqrt_binom_sum_scaled",
    "symmetric_state",
]
