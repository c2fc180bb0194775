import numpy as np
import pytest

from src.channels import apply, validate_cptp
from src.codes import (
    SERIES,
    SERIES_LABELS,
    AD41Context,
    RecoveryParams,
    alpha_opt,
    encode_isometry,
    evaluate_series,
    fe_best_guess,
    fe_family,
    fe_optimal,
    fit_series,
    fit_window,
    h_func,
    logical_noise,
    logical_paulis,
    series_reference,
    stabilizer_generators,
    stabilizer_projector,
)
from src.channels import pauli_string
from src.core import DomainError


PAULI_2x2 = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1, -1]).astype(complex),
}


def test_codewords_are_orthonormal_and_stabilized():
    c = encode_isometry()
    assert c.shape == (16, 2)
    assert c.conj().T @ c == pytest.approx(np.eye(2))
    for label in stabilizer_generators():
        assert pauli_string(label) @ c == pytest.approx(c)
    proj = stabilizer_projector()
    assert proj == pytest.approx(c @ c.conj().T, abs=1e-12)


def test_logical_paulis_act_on_code_space():
    c = encode_isometry()
    for name, op in logical_paulis().items():
        assert c.conj().T @ op @ c == pytest.approx(PAULI_2x2[name], abs=1e-12)


def test_logical_noise_endpoints():
    clean = logical_noise(0.0)
    assert clean.d_in == 2 and clean.d_out == 16
    rho = np.diag([0.3, 0.7]).astype(complex)
    c = encode_isometry()
    assert apply(clean, rho) == pytest.approx(c @ rho @ c.conj().T, abs=1e-12)
    damped = apply(logical_noise(1.0), rho)
    assert damped[0, 0].real == pytest.approx(1.0)
    assert np.trace(damped).real == pytest.approx(1.0)


def test_logical_noise_is_cptp():
    assert validate_cptp(logical_noise(0.2)).passed


def test_context_validation():
    assert AD41Context(0.25).tau == pytest.approx(0.75)
    with pytest.raises(DomainError):
        AD41Context(1.5)
    with pytest.raises(DomainError):
        RecoveryParams(alpha_abs=1.2)


def test_fe_family_values():
    assert fe_family(RecoveryParams(0.3, 0.4, 0.5), 1.0) == pytest.approx(0.25)
    assert fe_family(RecoveryParams(1.0), 0.1) == pytest.approx(0.894223, abs=1e-6)


@pytest.mark.parametrize("theta", [0.0, 0.05, 0.1, 0.3, 0.7, 1.0])
def test_optimal_parameters_reproduce_optimal_fidelity(theta):
    assert fe_family(RecoveryParams(alpha_opt(theta)), theta) == pytest.approx(fe_optimal(theta), abs=1e-12)


def test_alpha_opt_values():
    assert alpha_opt(0.0) == pytest.approx(1 / np.sqrt(2))
    assert alpha_opt(1.0) == pytest.approx(1.0)
    assert alpha_opt(0.1) == pytest.approx(0.777063, abs=1e-6)


def test_fe_optimal_values():
    assert fe_optimal(0.0) == pytest.approx(1.0)
    assert fe_optimal(0.1) == pytest.approx(0.985513, abs=1e-6)


def test_alpha_opt_maximizes_family():
    theta = 0.2
    grid = np.linspace(0.0, 1.0, 2001)
    values = [fe_family(RecoveryParams(a), theta) for a in grid]
    assert max(values) <= fe_optimal(theta) + 1e-12
    assert grid[int(np.argmax(values))] == pytest.approx(alpha_opt(theta), abs=1e-3)


def test_phases_only_lower_fidelity():
    theta = 0.1
    a = alpha_opt(theta)
    assert fe_family(RecoveryParams(a, psi=0.3), theta) < fe_optimal(theta)
    assert fe_family(RecoveryParams(a, phi=0.3), theta) < fe_optimal(theta)


def test_best_guess_consistency():
    assert fe_best_guess(0.1, 0.1) == pytest.approx(fe_optimal(0.1), abs=1e-14)
    gap = fe_optimal(0.1) - fe_best_guess(0.1, 0.11)
    assert gap > 0
    assert gap == pytest.approx(h_func(0.1) * 1e-4, rel=0.2)


def test_h_func_values():
    assert h_func(1.0) == 0.0
    assert h_func(0.0) == pytest.approx(0.25)
    assert h_func(0.1) == pytest.approx(0.241869, abs=1e-6)


@pytest.mark.parametrize("theta", [0.05, 0.2, 0.5])
def test_quadratic_gap_law(theta):
    eps = 1e-4
    ratio = (fe_optimal(theta) - fe_best_guess(theta, theta + eps)) / eps**2
    assert ratio == pytest.approx(h_func(theta), rel=1e-2)


def test_series_table():
    assert series_reference("leung") == (1.0, 0.0, -2.75)
    assert series_reference("incomplete") == (1.0, -0.25, -1.25)
    assert set(SERIES) == set(SERIES_LABELS)
    assert SERIES_LABELS["leung"] == "1−2.75θ²"
    assert evaluate_series("sdp", 0.1) == pytest.approx(1 - 0.0125)
    with pytest.raises(DomainError):
        series_reference("unknown")


def test_channel_adapted_series_fit():
    grid = fit_window()
    assert grid[0] == 0.0 and grid[-1] == pytest.approx(0.05)
    assert len(grid) == 51
    fit = fit_series(grid, np.array([fe_optimal(t) for t in grid]))
    assert fit.coefficients[0] == pytest.approx(1.0, abs=1e-6)
    assert fit.coefficients[1] == pytest.approx(0.0, abs=1e-3)
    assert fit.coefficients[2] == pytest.approx(-1.5, abs=0.05)
    assert fit.window == (0.0, pytest.approx(0.05))


def test_fit_series_exact_polynomial():
    x = np.linspace(0.0, 0.05, 11)
    fit = fit_series(x, 1 - 0.25 * x - 1.25 * x**2)
    assert fit.coefficients[:3] == pytest.approx((1.0, -0.25, -1.25), abs=1e-8)
    assert fit.residual < 1e-12
    with pytest.raises(DomainError):
        fit_series(x[:3], x[:3])
