import numpy as np
import pytest

from src.channels import amplitude_damping, random_channel, random_unitary, unitary_channel
from src.codes import fe_optimal
from src.core import DomainError
from src.multicycle import (
    CycleTrace,
    composite_chi00_check,
    delta_shift,
    fig4_data,
    iterate_bounds,
    iterate_fidelity_bounds,
    recurrence_upper,
    spectator_multicycle_term,
)
from src.spectator import SpectatorConfig


def test_recurrence_upper_values():
    assert recurrence_upper(0.9, 1.0) == pytest.approx(0.9)
    assert recurrence_upper(0.99, 0.99) == pytest.approx(1.0)
    assert recurrence_upper(0.99, 0.95) == pytest.approx(0.98431, abs=1e-4)


def test_recurrence_upper_is_symmetric():
    assert recurrence_upper(0.8, 0.95) == pytest.approx(recurrence_upper(0.95, 0.8))


def test_composite_bound_saturates_for_exact_reversal(rng):
    u = random_unitary(2, rng)
    report = composite_chi00_check(unitary_channel(u), unitary_channel(u.conj().T))
    assert report.actual == pytest.approx(1.0)
    assert report.bound == pytest.approx(1.0)
    assert report.holds


def test_composite_bound_holds_on_random_pairs():
    for seed in range(40):
        q = random_channel(2, 2, 1 + seed % 4, seed=seed)
        s = random_channel(2, 2, 1 + (seed // 4) % 4, seed=1000 + seed)
        assert composite_chi00_check(q, s).holds


def test_composite_bound_for_damping_chain():
    report = composite_chi00_check(amplitude_damping(0.1), amplitude_damping(0.2))
    assert report.holds
    assert report.actual < report.bound


def test_delta_shift():
    assert delta_shift(0.96, 0.0) == 0.0
    assert delta_shift(0.96, 0.01) == pytest.approx(0.025516, abs=1e-6)
    with pytest.raises(DomainError):
        delta_shift(1.0, 0.01)
    with pytest.raises(DomainError):
        delta_shift(0.9, -0.01)


def test_spectator_term_example():
    term = spectator_multicycle_term(0.1, 0.97, SpectatorConfig())
    assert term == pytest.approx(0.00977, rel=1e-2)


def test_spectator_term_vanishes_for_aligned_angles():
    fe_n = fe_optimal(0.2)
    assert spectator_multicycle_term(0.2, fe_n, SpectatorConfig()) == pytest.approx(0.0, abs=1e-15)


def test_spectator_term_signs_and_scaling():
    cfg = SpectatorConfig()
    fe_n = fe_optimal(0.1)
    assert spectator_multicycle_term(0.1, fe_n - 0.05, cfg) > 0
    assert spectator_multicycle_term(0.1, min(fe_n + 0.01, 0.999), cfg) < 0
    big = spectator_multicycle_term(0.1, 0.97, SpectatorConfig(m_qubits=10_000))
    assert abs(big) < 1e-5
    with pytest.raises(DomainError):
        spectator_multicycle_term(0.1, 1.0, cfg)


def test_fig4_rows():
    grid = [0.05, 0.1, 0.5]
    rows = fig4_data([0.99, 0.95], grid)
    assert len(rows) == 6
    for r in rows:
        assert 0.0 <= r.bound_perfect <= 1.0
        assert r.bound_incomplete <= 1.0
        assert r.bound_incomplete == pytest.approx(min(r.bound_incomplete_raw, 1.0))
        assert r.advantage_flag == (r.bound_incomplete > r.bound_perfect)


def test_fig4_advantage_regions_exist():
    grid = np.arange(0.005, 1.0, 0.005)
    rows = fig4_data([0.97], grid)
    flags = {r.advantage_flag for r in rows}
    assert flags == {True, False}


def test_iterate_fidelity_bounds():
    single = iterate_fidelity_bounds([0.9])
    assert single.fe_upper == pytest.approx((0.9,))
    series = iterate_fidelity_bounds([0.99, 0.99, 0.99])
    assert series.fe_upper == pytest.approx((0.99, 1.0, 1.0))
    assert series.delta_lower[1:] == (0.0, 0.0)
    with pytest.raises(DomainError):
        iterate_fidelity_bounds([])


def test_iterate_bounds_with_exact_estimates():
    trace = CycleTrace(thetas=(0.1, 0.1, 0.1), theta_hats=(0.1, 0.1, 0.1))
    result = iterate_bounds(trace, lambda t: 0.99, lambda t, th: 0.0)
    assert result.fe_upper == pytest.approx((0.99, 1.0, 1.0))


def test_iterate_bounds_subtracts_gap():
    trace = CycleTrace(thetas=(0.1,), theta_hats=(0.2,))
    result = iterate_bounds(trace, lambda t: 0.99, lambda t, th: (t - th) ** 2)
    assert result.fe_upper[0] == pytest.approx(0.98)


def test_cycle_trace_validation():
    assert CycleTrace((0.1, 0.2), (0.1, 0.3)).n == 2
    with pytest.raises(DomainError):
        CycleTrace((0.1,), (0.1, 0.2))
    with pytest.raises(DomainError):
        CycleTrace((), ())
    with pytest.raises(DomainError):
        CycleTrace((1.5,), (0.1,))


def test_fig4_handles_saturated_spectator():
    rows = fig4_data([0.99], [0.5, 0.98, 0.995], SpectatorConfig(gamma=10.0))
    assert len(rows) == 3
    saturated = [r for r in rows if r.theta_n >= 0.98]
    for r in saturated:
        assert r.bound_incomplete_raw == pytest.approx(r.bound_perfect)
