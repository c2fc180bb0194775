import numpy as np
import pytest

from src.channels import (
    QuantumChannel,
    amplitude_damping,
    depolarizing,
    identity_channel,
    random_channel,
    random_density,
)
from src.core import DimensionError, DomainError, StateError
from src.metrics import (
    angle_from_fidelity,
    average_fidelity,
    average_from_entanglement,
    bures_angle,
    chi00,
    chi_matrix,
    chi_to_json,
    entanglement_fidelity,
    entanglement_fidelity_kraus,
    entanglement_from_average,
    error_angle,
    kraus_angle_decomposition,
    state_fidelity,
    trace_distance,
)


def test_state_fidelity_basic(rng):
    rho = random_density(3, rng)
    assert state_fidelity(rho, rho) == pytest.approx(1.0)
    zero = np.diag([1.0, 0.0])
    one = np.diag([0.0, 1.0])
    assert state_fidelity(zero, one) == pytest.approx(0.0, abs=1e-12)
    plus = np.full((2, 2), 0.5)
    assert state_fidelity(zero, plus) == pytest.approx(0.5)


def test_state_fidelity_symmetric(rng):
    a, b = random_density(2, rng), random_density(2, rng)
    assert state_fidelity(a, b) == pytest.approx(state_fidelity(b, a))


def test_state_fidelity_rejects_bad_input():
    with pytest.raises(DimensionError):
        state_fidelity(np.eye(2) / 2, np.eye(3) / 3)
    with pytest.raises(StateError):
        state_fidelity(np.diag([1.5, -0.5]), np.eye(2) / 2)


def test_trace_distance_and_bures(rng):
    zero = np.diag([1.0, 0.0])
    one = np.diag([0.0, 1.0])
    assert trace_distance(zero, one) == pytest.approx(1.0)
    assert bures_angle(zero, one) == pytest.approx(np.pi / 2)
    a, b = random_density(2, rng), random_density(2, rng)
    f = state_fidelity(a, b)
    # Fuchs–van de Graaf
    assert 1 - np.sqrt(f) <= trace_distance(a, b) + 1e-12
    assert trace_distance(a, b) <= np.sqrt(1 - f) + 1e-12


def test_entanglement_fidelity_amplitude_damping():
    theta = 0.1
    expected = (1 + np.sqrt(1 - theta)) ** 2 / 4
    ch = amplitude_damping(theta)
    assert entanglement_fidelity(ch) == pytest.approx(expected, abs=1e-12)
    assert entanglement_fidelity_kraus(ch) == pytest.approx(expected, abs=1e-12)


def test_entanglement_fidelity_routes_agree(random_qubit_channels):
    for ch in random_qubit_channels + [random_channel(3, 3, 5, seed=2)]:
        assert entanglement_fidelity(ch) == pytest.approx(entanglement_fidelity_kraus(ch), abs=1e-12)


def test_entanglement_fidelity_requires_square():
    with pytest.raises(DimensionError):
        entanglement_fidelity(random_channel(2, 3, 2, seed=0))


def test_depolarizing_fidelities():
    # F_e = 1 − p + p/d²，平均保真度 1 − p(d−1)/d
    ch = depolarizing(2, 0.2)
    assert entanglement_fidelity(ch) == pytest.approx(0.85)
    assert average_fidelity(ch) == pytest.approx(0.9)


def test_average_fidelity_relation():
    assert average_from_entanglement(1.0, 2) == pytest.approx(1.0)
    assert average_from_entanglement(0.0, 2) == pytest.approx(1 / 3)
    assert entanglement_from_average(average_from_entanglement(0.7, 4), 4) == pytest.approx(0.7)
    with pytest.raises(DomainError):
        average_from_entanglement(1.5, 2)


def test_error_angle():
    assert error_angle(identity_channel(2)) == pytest.approx(0.0, abs=1e-7)
    assert angle_from_fidelity(0.5) == pytest.approx(np.pi / 4)
    assert angle_from_fidelity(0.0) == pytest.approx(np.pi / 2)
    with pytest.raises(DomainError):
        angle_from_fidelity(-0.1)


def test_chi_matrix_properties(random_qubit_channels):
    for ch in random_qubit_channels:
        chi = chi_matrix(ch)
        assert chi.basis_id == "pauli"
        assert np.allclose(chi.mat, chi.mat.conj().T)
        assert np.trace(chi.mat).real == pytest.approx(2.0)
        assert np.linalg.eigvalsh(chi.mat).min() > -1e-12
        assert chi.is_trace_preserving()
        assert chi.chi00 / 2 == pytest.approx(entanglement_fidelity(ch), abs=1e-12)
        assert chi00(ch) == pytest.approx(chi.chi00, abs=1e-12)


def test_chi_matrix_weyl_basis():
    chi = chi_matrix(random_channel(3, 3, 2, seed=4))
    assert chi.basis_id == "weyl"
    assert chi.mat.shape == (9, 9)
    assert chi.tp_residual() < 1e-10


def test_chi_of_depolarizing_is_diagonal():
    chi = chi_matrix(depolarizing(2, 0.4))
    assert chi.off_diagonal_max() < 1e-14
    assert np.diag(chi.mat).real == pytest.approx([2 * 0.7, 0.2, 0.2, 0.2])


def test_chi_to_json_shape():
    payload = chi_to_json(chi_matrix(amplitude_damping(0.2)))
    assert payload["d"] == 2
    assert len(payload["mat"]) == 4


def test_kraus_angle_decomposition_reconstructs(random_qubit_channels):
    for ch in random_qubit_channels:
        dec = kraus_angle_decomposition(ch)
        assert dec.weight_sum() == pytest.approx(2.0, abs=1e-12)
        assert dec.chi00() == pytest.approx(chi00(ch), abs=1e-12)
        for i, (entry, k) in enumerate(zip(dec.entries, ch.kraus)):
            assert 0.0 <= entry.phi <= np.pi / 2 + 1e-12
            assert np.linalg.norm(entry.v) == pytest.approx(1.0)
            assert dec.reconstruct(i, gauged=False) == pytest.approx(k, abs=1e-12)


def test_kraus_angle_decomposition_skips_zero_operators():
    ch = QuantumChannel(2, 2, (np.eye(2, dtype=complex), np.zeros((2, 2), dtype=complex)))
    dec = kraus_angle_decomposition(ch)
    assert len(dec.entries) == 1
    assert dec.entries[0].phi == pytest.approx(0.0)
    assert dec.entries[0].v[0] == 1.0


def test_kraus_angle_of_pure_error():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    dec = kraus_angle_decomposition(QuantumChannel.from_kraus([x]))
    assert dec.entries[0].phi == pytest.approx(np.pi / 2)
    assert dec.chi00() == pytest.approx(0.0, abs=1e-14)
