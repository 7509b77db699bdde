"""Inversion of I(a) = c with drainage and infiltration applications."""

from ._core import (
    AdmissibilityError,
    DomainError,
    Error,
    I_erfc_sum,
    I_fourier,
    ToleranceError,
    __version__,
    diffusion_from_soil,
    diffusivity,
    diffusivity_table,
    drain_spacing,
    drain_time,
    estimate_a,
    eval_h,
    eval_I,
    eval_theta,
    reduce_drainage,
    reduce_infiltration,
    relative_error,
    schemes,
    simulate_moisture,
    spacing_table,
    threshold_table,
    time_table,
    true_a,
)

__all__ = [
    "AdmissibilityError",
    "DomainError",
    "Error",
    "I_erfc_sum",
    "I_fourier",
    "ToleranceError",
    "__version__",
    "diffusion_from_soil",
    "diffusivity",
    "diffusivity_table",
    "drain_spacing",
    "drain_time",
    "estimate_a",
    "eval_h",
    "eval_I",
    "eval_theta",
    "reduce_drainage",
    "reduce_infiltration",
    "relative_error",
    "schemes",
    "simulate_moisture",
    "spacing_table",
    "threshold_table",
    "time_table",
    "true_a",
]
