"""Quantum channel core: Kraus channels, Choi matrices, standard families and JSON I/O."""
from src.channels.channel import (
    QuantumChannel,
    CPTPReport,
    identity_channel,
    unitary_channel,
    isometry_channel,
    validate_cptp,
    check_density,
    apply,
    apply_adjoint,
    compose,
    tensor,
    tensor_power,
    prune,
    require_square,
)
from src.channels.choi import (
    ChoiMatrix,
    kraus_to_choi,
    choi_to_kraus,
    choi_distance,
    max_entangled_vector,
)
from src.channels.library import (
    PAULIS,
    pauli_string,
    unitary_error_basis,
    depolarizing,
    amplitude_damping,
    theta_from_time,
    random_channel,
    random_unitary,
    random_density,
)
from src.channels.serialize import (
    matrix_to_json,
    matrix_from_json,
    channel_to_json,
    channel_from_json,
    load_channel,
    save_channel,
    write_atomic,
)

__all__ = [
    "QuantumChannel",
    "CPTPReport",
    "identity_channel",
    "unitary_channel",
    "isometry_channel",
    "validate_cptp",
    "check_density",
    "apply",
    "apply_adjoint",
    "compose",
    "tensor",
    "tensor_power",
    "prune",
    "require_square",
    "ChoiMatrix",
    "kraus_to_choi",
    "choi_to_kraus",
    "choi_distance",
    "max_entangled_vector",
    "PAULIS",
    "pauli_string",
    "unitary_error_basis",
    "depolarizing",
    "amplitude_damping",
    "theta_from_time",
    "random_channel",
    "random_unitary",
    "random_density",
    "matrix_to_json",
    "matrix_from_json",
    "channel_to_json",
    "channel_from_json",
    "load_channel",
    "save_channel",
    "write_atomic",
]
