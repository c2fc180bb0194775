"""Four-qubit amplitude-damping code and its closed-form recovery fidelities."""
from src.codes.ad41 import (
    SERIES,
    SERIES_LABELS,
    RecoveryParams,
    AD41Context,
    SeriesFit,
    encode_isometry,
    stabilizer_generators,
    stabilizer_projector,
    logical_paulis,
    logical_noise,
    fe_family,
    alpha_opt,
    fe_optimal,
    fe_best_guess,
    h_func,
    series_reference,
    evaluate_series,
    fit_series,
    fit_window,
)

__all__ = [
    "SERIES",
    "SERIES_LABELS",
    "RecoveryParams",
    "AD41Context",
    "SeriesFit",
    "encode_isometry",
    "stabilizer_generators",
    "stabilizer_projector",
    "logical_paulis",
    "logical_noise",
    "fe_family",
    "alpha_opt",
    "fe_optimal",
    "fe_best_guess",
    "h_func",
    "series_reference",
    "evaluate_series",
    "fit_series",
    "fit_window",
]
