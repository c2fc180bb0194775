"""Fidelity metrics, error angles and the χ-matrix representation."""
from src.metrics.fidelity import (
    state_fidelity,
    trace_distance,
    bures_distance,
    bures_angle,
    entanglement_fidelity,
    entanglement_fidelity_kraus,
    average_fidelity,
    average_from_entanglement,
    entanglement_from_average,
    angle_from_fidelity,
    error_angle,
)
from src.metrics.chi import (
    ChiMatrix,
    KrausAngle,
    KrausAngleDecomposition,
    operator_basis,
    basis_coefficients,
    chi_matrix,
    chi00,
    chi_to_json,
    kraus_angle_decomposition,
)

__all__ = [
    "state_fidelity",
    "trace_distance",
    "bures_distance",
    "bures_angle",
    "entanglement_fidelity",
    "entanglement_fidelity_kraus",
    "average_fidelity",
    "average_from_entanglement",
    "entanglement_from_average",
    "angle_from_fidelity",
    "error_angle",
    "ChiMatrix",
    "KrausAngle",
    "KrausAngleDecomposition",
    "operator_basis",
    "basis_coefficients",
    "chi_matrix",
    "chi00",
    "chi_to_json",
    "kraus_angle_decomposition",
]
