"""Unitary designs and channel twirling."""
from src.twirl.designs import (
    UnitaryEnsemble,
    TwirlDPIReport,
    twirl_discrete,
    pauli_ensemble,
    clifford_ensemble_1q,
    depolarizing_parameter,
    haar_twirl_analytic,
    check_twirl_dpi,
)

__all__ = [
    "UnitaryEnsemble",
    "TwirlDPIReport",
    "twirl_discrete",
    "pauli_ensemble",
    "clifford_ensemble_1q",
    "depolarizing_parameter",
    "haar_twirl_analytic",
    "check_twirl_dpi",
]
