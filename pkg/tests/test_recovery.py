import numpy as np
import pytest
from scipy.linalg import polar

from src.channels import (
    amplitude_damping,
    choi_distance,
    compose,
    identity_channel,
    random_channel,
    random_unitary,
    unitary_channel,
    validate_cptp,
)
from src.codes import fe_optimal, logical_noise
from src.core import DimensionError, DomainError, RecoveryOptions
from src.metrics import entanglement_fidelity
from src.recovery import RecoveryProblem, optimize_recovery, recovery_for_estimate
from src.utils import complex_gaussian


OPTS = RecoveryOptions(starts=4, seed=7)


def test_gradient_matches_finite_difference(rng):
    problem = RecoveryProblem(random_channel(2, 3, 3, seed=4))
    v = problem.random_isometry(rng)
    direction = complex_gaussian(rng, v.shape)
    eps = 1e-6
    numeric = (problem.objective(v + eps * direction) - problem.objective(v - eps * direction)) / (2 * eps)
    analytic = float(np.vdot(problem.gradient(v), direction).real)
    assert numeric == pytest.approx(analytic, abs=1e-8)


def test_riemannian_gradient_is_tangent(rng):
    problem = RecoveryProblem(amplitude_damping(0.2))
    v = problem.random_isometry(rng)
    xi = problem.riemannian_gradient(v)
    a = v.conj().T @ xi
    assert a + a.conj().T == pytest.approx(np.zeros_like(a), abs=1e-12)


def test_objective_matches_composed_fidelity(rng):
    noise = random_channel(2, 2, 2, seed=6)
    problem = RecoveryProblem(noise)
    v = problem.random_isometry(rng)
    recovery = problem.to_channel(v)
    assert validate_cptp(recovery).passed
    assert problem.objective(v) == pytest.approx(entanglement_fidelity(compose(recovery, noise)), abs=1e-12)


def test_env_dim_validation():
    noise = amplitude_damping(0.1)
    with pytest.raises(DomainError):
        RecoveryProblem(noise, env_dim=5)
    with pytest.raises(DimensionError):
        RecoveryProblem(random_channel(2, 8, 4, seed=0), env_dim=2)


def test_identity_noise_is_perfectly_recoverable():
    sol = optimize_recovery(identity_channel(2), OPTS)
    assert sol.fe_achieved == pytest.approx(1.0, abs=1e-8)
    assert choi_distance(sol.recovery, identity_channel(2)) < 1e-4
    assert sol.seed == 7


def test_unitary_noise_is_reversed(rng):
    u = random_unitary(2, rng)
    sol = optimize_recovery(unitary_channel(u), OPTS)
    assert sol.fe_achieved == pytest.approx(1.0, abs=1e-8)
    assert choi_distance(sol.recovery, unitary_channel(u.conj().T)) < 1e-4


def test_amplitude_damping_beats_doing_nothing():
    noise = amplitude_damping(0.05)
    sol = optimize_recovery(noise, OPTS)
    baseline = (1 + np.sqrt(0.95)) ** 2 / 4
    assert sol.fe_achieved >= baseline - 1e-9
    assert validate_cptp(sol.recovery).passed


def test_optimizer_is_monotone_in_iterations():
    noise = random_channel(2, 2, 3, seed=10)
    short = optimize_recovery(noise, RecoveryOptions(starts=1, max_iters=2, seed=3))
    long = optimize_recovery(noise, RecoveryOptions(starts=1, max_iters=200, seed=3))
    assert long.fe_achieved >= short.fe_achieved - 1e-9


def test_optimizer_is_deterministic_across_workers():
    noise = random_channel(2, 2, 2, seed=11)
    a = optimize_recovery(noise, RecoveryOptions(starts=3, seed=5))
    b = optimize_recovery(noise, RecoveryOptions(starts=3, seed=5, workers=3))
    assert a.fe_achieved == b.fe_achieved
    assert a.iterations == b.iterations


def test_optimizer_rejects_bad_options():
    with pytest.raises(DomainError):
        optimize_recovery(identity_channel(2), RecoveryOptions(starts=0))


def test_recovery_for_exact_estimate():
    a = recovery_for_estimate(amplitude_damping, 0.1, OPTS)
    b = optimize_recovery(amplitude_damping(0.1), OPTS)
    assert a.fe_achieved == b.fe_achieved


def test_seesaw_step_never_decreases(rng):
    problem = RecoveryProblem(random_channel(2, 4, 3, seed=12))
    v = problem.random_isometry(rng)
    for _ in range(20):
        nxt, _ = polar(problem.gradient(v))
        assert problem.objective(nxt) >= problem.objective(v) - 1e-12
        v = nxt


def test_transpose_start_is_an_isometry():
    problem = RecoveryProblem(logical_noise(0.05))
    v = problem.transpose_isometry()
    assert v.conj().T @ v == pytest.approx(np.eye(16), abs=1e-12)


def test_code_is_perfectly_recoverable_without_damping():
    sol = optimize_recovery(logical_noise(0.0), RecoveryOptions(starts=2, seed=20240101))
    assert sol.fe_achieved == pytest.approx(1.0, abs=1e-9)
    assert sol.converged


@pytest.mark.slow
def test_four_qubit_code_optimal_recovery():
    theta = 0.05
    sol = optimize_recovery(logical_noise(theta), RecoveryOptions(starts=8, seed=1))
    assert sol.fe_achieved >= 1 - 1.5 * theta**2 - 1e-4
    assert sol.fe_achieved == pytest.approx(1 - 1.25 * theta**2, abs=5e-4)


@pytest.mark.slow
@pytest.mark.parametrize("theta", [0.02, 0.05, 0.1])
def test_numerical_optimum_dominates_channel_adapted(theta):
    sol = optimize_recovery(logical_noise(theta), RecoveryOptions(starts=8, seed=20240101))
    assert sol.fe_achieved >= fe_optimal(theta) - 1e-6
