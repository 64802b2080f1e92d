"""Dimension-adaptive sparse interpolation on weighted Leja nodes."""

from ._core import (
    BenchmarkModel,
    BuildReport,
    Distribution,
    LejaSequence,
    Surrogate,
    adaptive_build,
    benchmark,
    borehole_eval,
    leja_nodes,
    mc_reference_mean,
    meromorphic_eval,
    rms_cv_error,
    sobol_points,
    steel_column_eval,
)

__all__ = [
    "BenchmarkModel",
    "BuildReport",
    "Distribution",
    "LejaSequence",
    "Surrogate",
    "adaptive_build",
    "benchmark",
    "borehole_eval",
    "leja_nodes",
    "mc_reference_mean",
    "meromorphic_eval",
    "rms_cv_error",
    "sobol_points",
    "steel_column_eval",
]
