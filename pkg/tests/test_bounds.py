import numpy as np
import pytest

from src.bounds import (
    chaining_upper_multi,
    chaining_upper_single,
    check_chaining,
    diamond_depolarizing_exact,
    diamond_lower_estimate,
    diamond_upper_choi,
    fe_lower_bound,
    kappa,
    output_trace_distance,
    spectator_gap_bound,
)
from src.channels import (
    amplitude_damping,
    depolarizing,
    identity_channel,
    max_entangled_vector,
    random_channel,
)
from src.core import DiamondOptions, DimensionError, DomainError
from src.twirl import depolarizing_parameter


OPTS = DiamondOptions(starts=8, seed=42)


def test_kappa_values():
    assert kappa(2) == pytest.approx(0.75)
    assert kappa(3) == pytest.approx(8 / 9)
    values = [kappa(d) for d in range(2, 10)]
    assert all(a < b < 1 for a, b in zip(values, values[1:]))
    with pytest.raises(DimensionError):
        kappa(1)


def test_depolarizing_exact():
    assert diamond_depolarizing_exact(0.3, 0.3, 2) == 0.0
    assert diamond_depolarizing_exact(0.0, 1.0, 2) == pytest.approx(0.75)
    assert diamond_depolarizing_exact(0.1, 0.4, 3) == pytest.approx(0.266667, abs=1e-6)
    with pytest.raises(DomainError):
        diamond_depolarizing_exact(-0.1, 0.5, 2)


def test_estimate_of_equal_channels_is_zero():
    ch = amplitude_damping(0.2)
    est = diamond_lower_estimate(ch, ch, OPTS)
    assert est.value == pytest.approx(0.0, abs=1e-12)
    assert diamond_upper_choi(ch, ch) == pytest.approx(0.0, abs=1e-12)


def test_estimate_identity_vs_full_depolarization():
    est = diamond_lower_estimate(identity_channel(2), depolarizing(2, 1.0), OPTS)
    assert est.value == pytest.approx(0.75, abs=1e-6)
    assert est.converged
    assert est.starts_used == 8


@pytest.mark.parametrize("d, p1, p2", [(2, 0.2, 0.5), (3, 0.1, 0.4)])
def test_estimate_matches_depolarizing_formula(d, p1, p2):
    est = diamond_lower_estimate(depolarizing(d, p1), depolarizing(d, p2), OPTS)
    assert est.value == pytest.approx(diamond_depolarizing_exact(p1, p2, d), abs=1e-6)


def test_maximally_entangled_state_is_optimal_for_depolarizing():
    q, s = depolarizing(2, 0.2), depolarizing(2, 0.5)
    phi = max_entangled_vector(2)
    assert output_trace_distance(q, s, phi) == pytest.approx(0.225, abs=1e-12)


def test_estimate_is_reproducible_and_worker_independent():
    q, s = random_channel(2, 2, 2, seed=1), random_channel(2, 2, 3, seed=2)
    a = diamond_lower_estimate(q, s, DiamondOptions(starts=6, seed=9))
    b = diamond_lower_estimate(q, s, DiamondOptions(starts=6, seed=9, workers=3))
    assert a.value == b.value
    assert np.array_equal(a.achieving_state, b.achieving_state)


def test_sandwich_bounds(random_qubit_channels):
    channels = random_qubit_channels
    for q in channels:
        for s in channels:
            est = diamond_lower_estimate(q, s, DiamondOptions(starts=4, seed=0)).value
            upper = diamond_upper_choi(q, s)
            assert fe_lower_bound(q, s) <= est + 1e-6
            assert est <= upper + 1e-9
            assert 0.0 <= est <= 1.0


def test_non_square_channels():
    q, s = random_channel(2, 3, 2, seed=3), random_channel(2, 3, 2, seed=4)
    est = diamond_lower_estimate(q, s, DiamondOptions(starts=4, seed=1))
    assert 0.0 < est.value <= diamond_upper_choi(q, s) + 1e-9
    with pytest.raises(DimensionError):
        fe_lower_bound(q, s)
    with pytest.raises(DimensionError):
        diamond_lower_estimate(q, identity_channel(2))


def test_estimator_rejects_bad_options():
    ch = identity_channel(2)
    with pytest.raises(DomainError):
        diamond_lower_estimate(ch, ch, DiamondOptions(starts=0))


def test_twirled_lower_bound():
    q, s = amplitude_damping(0.1), amplitude_damping(0.3)
    est = diamond_lower_estimate(q, s, OPTS).value
    twirled = kappa(2) * abs(depolarizing_parameter(q) - depolarizing_parameter(s))
    assert twirled <= est + 1e-6


def test_triangle_inequality(random_qubit_channels):
    a, b, c = random_qubit_channels[1:]
    opts = DiamondOptions(starts=6, seed=5)
    ac = diamond_lower_estimate(a, c, opts).value
    assert ac <= diamond_upper_choi(a, b) + diamond_upper_choi(b, c) + 1e-9


def test_spectator_gap_bound():
    r = random_channel(2, 2, 2, seed=8)
    gap = spectator_gap_bound(r, r, OPTS)
    assert gap.lower_estimate == pytest.approx(0.0, abs=1e-12)
    assert gap.admits(0.0, 1e-9) == (True, True)
    other = spectator_gap_bound(r, random_channel(2, 2, 2, seed=9), OPTS)
    assert other.lower_estimate <= other.upper + 1e-9


def test_chaining_upper():
    assert chaining_upper_single(0.0, 0.05) == pytest.approx(0.05)
    report = chaining_upper_multi([0.01, 0.02, 0.01], [0.05, 0.05, 0.05])
    assert report.total == pytest.approx(0.19)
    assert report.channel_gap == pytest.approx(0.04)
    assert report.epsilon_theta == pytest.approx(0.15)
    assert report.per_cycle == pytest.approx((0.06, 0.07, 0.06))
    with pytest.raises(DomainError):
        chaining_upper_multi([0.01], [0.05, 0.05])
    with pytest.raises(DomainError):
        chaining_upper_single(-0.1, 0.0)


def test_chaining_single_with_estimator_value():
    gap = diamond_lower_estimate(amplitude_damping(0.1), amplitude_damping(0.12), OPTS).value
    assert chaining_upper_single(gap, 0.0) == gap


def test_check_chaining():
    q, q2 = amplitude_damping(0.1), amplitude_damping(0.15)
    s, s2 = random_channel(2, 2, 2, seed=12), random_channel(2, 2, 2, seed=13)
    report = check_chaining(q, q2, s, s2, DiamondOptions(starts=4, seed=2))
    assert report.holds
    assert report.lhs <= report.rhs + 1e-6
