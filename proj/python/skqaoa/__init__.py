"""Infinite-size QAOA energies on the Sherrington-Kirkpatrick model."""

from ._core import (
    EnsembleStats,
    EvalReport,
    OptimizationResult,
    PARISI_VALUE,
    QaoaParams,
    SKInstance,
    SkqaoaError,
    __version__,
    bar,
    canonicalize,
    compute_w,
    cost_vector,
    ensemble_stats,
    evaluate_vp,
    extrapolate_params,
    fixture,
    level_sizes,
    m2_p1_finite,
    make_instance,
    optimize_vp,
    ordered_d,
    partition_level,
    q_amplitude,
    run_qaoa_expectation,
    sample_instance,
    second_moment_infinite,
    simulated_annealing,
    spectral_round,
    star,
    v1_finite_n,
    v1_infinite,
    v2_infinite,
    vp_value,
    zero_temp_descent,
)


def params(gamma, beta):
    """Shorthand for QaoaParams(list(gamma), list(beta))."""
    return QaoaParams(list(gamma), list(beta))
