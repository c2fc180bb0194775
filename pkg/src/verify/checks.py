"""Property checks executed by the `verify` command.

Each check returns one record per inequality family, reporting the worst case
over its samples.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from src.bounds import diamond
from src.bounds.chaining import check_chaining
from src.channels import (
    QuantumChannel,
    apply,
    apply_adjoint,
    choi_distance,
    choi_to_kraus,
    compose,
    depolarizing,
    kraus_to_choi,
    max_entangled_vector,
    random_channel,
    random_density,
    random_unitary,
    unitary_channel,
    validate_cptp,
)
from src.codes.ad41 import (
    SERIES,
    RecoveryParams,
    alpha_opt,
    encode_isometry,
    fe_best_guess,
    fe_family,
    fe_optimal,
    fit_series,
    fit_window,
    h_func,
    logical_noise,
    stabilizer_projector,
)
from src.core.config import DiamondOptions, RecoveryOptions
from src.metrics import (
    average_fidelity,
    chi00,
    chi_matrix,
    entanglement_fidelity,
    entanglement_fidelity_kraus,
    trace_distance,
)
from src.multicycle import composite_chi00_check, fig4_data, recurrence_upper, spectator_multicycle_term
from src.recovery import RecoveryProblem, optimize_recovery
from src.reports.figures import fig5_data, incomplete_exact, sdp_fit, theta_grid
from src.spectator import (
    SpectatorConfig,
    fig3_data,
    g_numeric,
    gamma_monotone_domain,
    mean_delta_fe,
    monte_carlo_gap,
)
from src.twirl import (
    check_twirl_dpi,
    clifford_ensemble_1q,
    depolarizing_parameter,
    haar_twirl_analytic,
    pauli_ensemble,
    twirl_discrete,
)
from src.utils.rng import complex_gaussian
from src.verify.registry import CheckRecord, VerifyContext, check, tolerance_record

PAULI_Z = np.diag([1.0, -1.0]).astype(complex)


def _random(rng: np.random.Generator, d: int) -> QuantumChannel:
    k = int(rng.integers(1, d * d + 1))
    return random_channel(d, d, k, int(rng.integers(2**32)))


def _diamond_opts(ctx: VerifyContext) -> DiamondOptions:
    return DiamondOptions(starts=ctx.count(8, 3), max_iters=200, seed=ctx.seed)


def _recovery_opts(ctx: VerifyContext) -> RecoveryOptions:
    return RecoveryOptions(starts=ctx.count(8, 2), seed=ctx.seed)


# ---------------------------------------------------------------- channels


@check("channels.adjoint_contract", "⟨Q(N), M⟩ = ⟨N, Q†(M)⟩")
def _adjoint(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("channels.adjoint_contract")
    errors = []
    for _ in range(ctx.count(100, 20)):
        d = int(rng.choice([2, 3, 4]))
        ch = _random(rng, d)
        n, m = complex_gaussian(rng, (d, d)), complex_gaussian(rng, (d, d))
        lhs = np.vdot(apply(ch, n, strict=False), m)
        rhs = np.vdot(n, apply_adjoint(ch, m))
        errors.append((abs(lhs - rhs), 1e-10))
    return [CheckRecord.worst("channels.adjoint_contract", errors)]


@check("channels.choi_round_trip", "choi_to_kraus∘kraus_to_choi 在 Choi 层面为恒等")
def _round_trip(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("channels.choi_round_trip")
    pairs = []
    for _ in range(ctx.count(100, 20)):
        ch = _random(rng, int(rng.choice([2, 3, 4])))
        pairs.append((choi_distance(ch, choi_to_kraus(kraus_to_choi(ch))), 1e-10))
    return [CheckRecord.worst("channels.choi_round_trip", pairs)]


@check("channels.associativity", "(A∘B)∘C = A∘(B∘C)")
def _associativity(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("channels.associativity")
    pairs = []
    for _ in range(ctx.count(50, 10)):
        d = int(rng.choice([2, 3]))
        a, b, c = (_random(rng, d) for _ in range(3))
        pairs.append((choi_distance(compose(compose(a, b), c), compose(a, compose(b, c))), 1e-10))
    return [CheckRecord.worst("channels.associativity", pairs)]


@check("channels.random_cptp", "随机信道保迹残差 < 1e−10")
def _random_cptp(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("channels.random_cptp")
    pairs = [
        (validate_cptp(_random(rng, int(rng.choice([2, 3, 4])))).tp_residual, 1e-10)
        for _ in range(ctx.count(200, 20))
    ]
    return [CheckRecord.worst("channels.random_cptp", pairs)]


# ---------------------------------------------------------------- fidelity


@check("fidelity.route_equality", "Choi 路径与 Kraus 路径的 F_e 一致")
def _routes(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("fidelity.route_equality")
    pairs = []
    for _ in range(ctx.count(500, 50)):
        ch = _random(rng, int(rng.choice([2, 3, 4])))
        pairs.append((abs(entanglement_fidelity(ch) - entanglement_fidelity_kraus(ch)), 1e-12))
    return [CheckRecord.worst("fidelity.route_equality", pairs)]


@check("fidelity.kraus_remixing", "Kraus 集合酉混合后 F_e 不变")
def _remixing(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("fidelity.kraus_remixing")
    pairs = []
    for _ in range(ctx.count(100, 20)):
        d = int(rng.choice([2, 3]))
        ch = _random(rng, d)
        u = random_unitary(ch.kraus_count, rng)
        mixed = QuantumChannel(d, d, tuple(np.einsum("j,jab->ab", row, np.stack(ch.kraus)) for row in u))
        pairs.append((abs(entanglement_fidelity(mixed) - entanglement_fidelity(ch)), 1e-12))
    return [CheckRecord.worst("fidelity.kraus_remixing", pairs)]


@check("fidelity.chi00_range", "0 ≤ χ00 ≤ d")
def _chi_range(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("fidelity.chi00_range")
    pairs = []
    for _ in range(ctx.count(200, 20)):
        d = int(rng.choice([2, 3, 4]))
        value = chi00(_random(rng, d))
        pairs.extend([(value, d + 1e-12), (-1e-12, value)])
    return [CheckRecord.worst("fidelity.chi00_range", pairs)]


@check("fidelity.hhh_depolarizing", "F_avg(depol(d,p)) = 1 − (d−1)p/d")
def _hhh(ctx: VerifyContext) -> list[CheckRecord]:
    pairs = [
        (abs(average_fidelity(depolarizing(d, p)) - (1 - (d - 1) * p / d)), 1e-12)
        for d in (2, 3)
        for p in np.linspace(0.0, 1.0, 21)
    ]
    return [CheckRecord.worst("fidelity.hhh_depolarizing", pairs)]


# ---------------------------------------------------------------- twirl


@check("twirl.one_design", "Pauli 系综平均 UρU† = I/d")
def _one_design(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("twirl.one_design")
    pairs = []
    for n in (1, 2):
        ensemble = pauli_ensemble(n)
        for _ in range(ctx.count(100, 10)):
            rho = random_density(ensemble.d, rng)
            avg = ensemble.average_state(rho)
            pairs.append((np.abs(avg - np.eye(ensemble.d) / ensemble.d).max(), 1e-10))
    return [CheckRecord.worst("twirl.one_design", pairs)]


@check("twirl.clifford_two_design", "Clifford 扭曲 = Haar 扭曲（Choi 层面）")
def _two_design(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("twirl.clifford_two_design")
    clifford = clifford_ensemble_1q()
    choi_pairs, fe_pairs = [], []
    for _ in range(ctx.count(100, 10)):
        ch = _random(rng, 2)
        twirled = twirl_discrete(ch, clifford)
        choi_pairs.append((choi_distance(twirled, haar_twirl_analytic(ch)), 1e-10))
        fe_pairs.append((abs(entanglement_fidelity(twirled) - entanglement_fidelity(ch)), 1e-10))
    return [
        CheckRecord.worst("twirl.clifford_two_design", choi_pairs),
        CheckRecord.worst("twirl.fidelity_preserved", fe_pairs),
    ]


@check("twirl.pauli_diagonal_chi", "Pauli 扭曲后 χ 为对角")
def _pauli_diagonal(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("twirl.pauli_diagonal_chi")
    ensemble = pauli_ensemble(1)
    pairs = [
        (chi_matrix(twirl_discrete(_random(rng, 2), ensemble)).off_diagonal_max(), 1e-10)
        for _ in range(ctx.count(100, 10))
    ]
    return [CheckRecord.worst("twirl.pauli_diagonal_chi", pairs)]


@check("twirl.dpi", "D(Q,S) ≥ D(twirl Q, twirl S)")
def _dpi(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("twirl.dpi")
    clifford = clifford_ensemble_1q()
    pairs = []
    for _ in range(ctx.count(20, 4)):
        report = check_twirl_dpi(_random(rng, 2), _random(rng, 2), clifford, _diamond_opts(ctx))
        pairs.append((report.rhs, report.lhs + 1e-6))
    return [CheckRecord.worst("twirl.dpi", pairs)]


# ---------------------------------------------------------------- diamond


@check("diamond.kappa", "κ(2) = 3/4，κ(3) = 8/9")
def _kappa(ctx: VerifyContext) -> list[CheckRecord]:
    return [
        tolerance_record("diamond.kappa", diamond.kappa(2) - 0.75, tol=0.0, detail="d=2"),
        tolerance_record("diamond.kappa_d3", diamond.kappa(3) - 8 / 9, tol=1e-15, detail="d=3"),
    ]


@check("diamond.depolarizing_exact", "去极化信道对的估计值等于解析值")
def _depolarizing_exact(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("diamond.depolarizing_exact")
    value_pairs, state_pairs = [], []
    for _ in range(ctx.count(50, 8)):
        d = int(rng.choice([2, 3]))
        p1, p2 = rng.uniform(0, 1, size=2)
        est = diamond.diamond_lower_estimate(depolarizing(d, p1), depolarizing(d, p2), _diamond_opts(ctx))
        exact = diamond.diamond_depolarizing_exact(p1, p2, d)
        value_pairs.append((abs(est.value - exact), 1e-4))
        overlap = abs(np.vdot(max_entangled_vector(d), est.achieving_state)) ** 2
        state_pairs.append((1 - overlap, 1e-6))
    return [
        CheckRecord.worst("diamond.depolarizing_exact", value_pairs),
        CheckRecord.worst("diamond.maximally_entangled_optimum", state_pairs),
    ]


@check("diamond.sandwich", "估计值 ≤ Choi 上界")
def _sandwich(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("diamond.sandwich")
    pairs = []
    for _ in range(ctx.count(200, 20)):
        q, s = _random(rng, 2), _random(rng, 2)
        est = diamond.diamond_lower_estimate(q, s, _diamond_opts(ctx))
        pairs.append((est.value, diamond.diamond_upper_choi(q, s) + 1e-9))
    return [CheckRecord.worst("diamond.sandwich", pairs)]


@check("diamond.fidelity_lower_bound", "估计值 ≥ |ΔF_e| 且 ≥ Haar 扭曲后的解析距离")
def _fe_lower(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("diamond.fidelity_lower_bound")
    fe_pairs, twirl_pairs = [], []
    for _ in range(ctx.count(200, 20)):
        q, s = _random(rng, 2), _random(rng, 2)
        est = diamond.diamond_lower_estimate(q, s, _diamond_opts(ctx)).value
        fe_pairs.append((diamond.fe_lower_bound(q, s), est + 1e-4))
        twirled = diamond.kappa(2) * abs(depolarizing_parameter(q) - depolarizing_parameter(s))
        twirl_pairs.append((twirled, est + 1e-6))
    return [
        CheckRecord.worst("diamond.fidelity_lower_bound", fe_pairs),
        CheckRecord.worst("diamond.twirled_lower_bound", twirl_pairs),
    ]


@check("diamond.triangle", "迹距离三角不等式")
def _triangle(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("diamond.triangle")
    pairs = []
    for _ in range(ctx.count(200, 20)):
        d = int(rng.choice([2, 3, 4]))
        rho, sigma, tau = (random_density(d, rng) for _ in range(3))
        pairs.append((trace_distance(rho, sigma), trace_distance(rho, tau) + trace_distance(tau, sigma) + 1e-12))
    return [CheckRecord.worst("diamond.triangle", pairs)]


@check("diamond.chaining", "D(S∘Q, S′∘Q′) ≤ D(Q,Q′) + D(S,S′)")
def _chaining(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("diamond.chaining")
    pairs = []
    for _ in range(ctx.count(20, 4)):
        report = check_chaining(*(_random(rng, 2) for _ in range(4)), opts=_diamond_opts(ctx))
        pairs.append((report.lhs, report.rhs + 1e-6))
    return [CheckRecord.worst("diamond.chaining", pairs)]


# ---------------------------------------------------------------- recovery


@check("recovery.gradient", "解析梯度与中心差分一致")
def _gradient(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("recovery.gradient")
    pairs = []
    for _ in range(ctx.count(10, 3)):
        noise = random_channel(2, 4, int(rng.integers(1, 9)), int(rng.integers(2**32)))
        problem = RecoveryProblem(noise)
        v = problem.random_isometry(rng)
        direction = complex_gaussian(rng, v.shape)
        h = 1e-6
        numeric = (problem.objective(v + h * direction) - problem.objective(v - h * direction)) / (2 * h)
        analytic = float(np.vdot(problem.gradient(v), direction).real)
        pairs.append((abs(numeric - analytic), 1e-5 * max(abs(analytic), 1.0)))
    return [CheckRecord.worst("recovery.gradient", pairs)]


@check("recovery.channel_adapted_dominated", "数值最优恢复 ≥ fe_optimal(θ) − 1e−6")
def _cross_validation(ctx: VerifyContext) -> list[CheckRecord]:
    pairs = []
    for theta in (0.05,) if ctx.quick else (0.02, 0.05, 0.1):
        solution = optimize_recovery(logical_noise(theta), _recovery_opts(ctx))
        pairs.append((fe_optimal(theta) - 1e-6, solution.fe_achieved))
    return [CheckRecord.worst("recovery.channel_adapted_dominated", pairs)]


@check("recovery.spectator_gap", "F_e(R_θ∘N_θ) − F_e(R_θ̂∘N_θ) ≤ Choi 上界(R_θ, R_θ̂)")
def _incomplete_gap(ctx: VerifyContext) -> list[CheckRecord]:
    thetas = (0.05, 0.1, 0.15) if ctx.quick else (0.02, 0.05, 0.08, 0.1, 0.12)
    recoveries = {t: optimize_recovery(logical_noise(t), _recovery_opts(ctx)).recovery for t in thetas}
    pairs = []
    for theta in thetas:
        noise = logical_noise(theta)
        best = entanglement_fidelity(compose(recoveries[theta], noise))
        for theta_hat in thetas:
            guess = entanglement_fidelity(compose(recoveries[theta_hat], noise))
            upper = diamond.diamond_upper_choi(recoveries[theta], recoveries[theta_hat])
            pairs.append((best - guess, upper + 1e-6))
    return [CheckRecord.worst("recovery.spectator_gap", pairs)]


@check("recovery.sdp_fit", "数值最优恢复在 [0, 0.05] 上拟合的 θ² 系数为 −1.25 ± 0.1")
def _sdp_series(ctx: VerifyContext) -> list[CheckRecord]:
    fit = sdp_fit(points=ctx.count(6, 5), opts=_recovery_opts(ctx))
    c2 = fit.coefficients[2]
    return [CheckRecord.at_most("recovery.sdp_fit", abs(c2 - SERIES["sdp"][2]), 0.1, f"c2={c2:.4f}")]


# ---------------------------------------------------------------- ad41


@check("ad41.codewords", "稳定子投影固定码字，C†C = I")
def _codewords(ctx: VerifyContext) -> list[CheckRecord]:
    c = encode_isometry()
    return [
        tolerance_record("ad41.codewords", np.abs(stabilizer_projector() @ c - c).max(), tol=1e-15),
        tolerance_record("ad41.isometry", np.abs(c.conj().T @ c - np.eye(2)).max(), tol=1e-15),
    ]


@check("ad41.optimality_grid", "fe_optimal(θ) ≥ fe_family(p, θ)")
def _optimality(ctx: VerifyContext) -> list[CheckRecord]:
    n = ctx.count(20, 6)
    alphas = np.linspace(0.0, 1.0, n)
    angles = np.linspace(0.0, 2 * np.pi, n)
    pairs = []
    for theta in np.round(np.arange(0.0, 1.0 + 1e-9, 0.05), 10):
        best = fe_optimal(theta)
        top = max(
            fe_family(RecoveryParams(a, psi, phi), theta)
            for a in alphas
            for psi in angles
            for phi in angles
        )
        pairs.append((top, best + 1e-12))
    return [CheckRecord.worst("ad41.optimality_grid", pairs)]


@check("ad41.alpha_stationary", "∂fe_family/∂|α| 在 α_opt 处为 0")
def _stationary(ctx: VerifyContext) -> list[CheckRecord]:
    h = 1e-6
    pairs = []
    # θ 更大时 α_opt 贴近 1，β = √(1−α²) 的高阶导数使差分失真
    for theta in np.round(np.arange(0.05, 0.61, 0.05), 10):
        a = alpha_opt(theta)
        derivative = (
            fe_family(RecoveryParams(a + h), theta) - fe_family(RecoveryParams(a - h), theta)
        ) / (2 * h)
        pairs.append((abs(derivative), 1e-8))
    return [CheckRecord.worst("ad41.alpha_stationary", pairs)]


@check("ad41.quadratic_gap", "[fe_optimal − fe_best_guess]/ε² → h(θ)")
def _quadratic_gap(ctx: VerifyContext) -> list[CheckRecord]:
    eps = 1e-4
    pairs = []
    for theta in np.round(np.arange(0.05, 0.91, 0.05), 10):
        ratio = (fe_optimal(theta) - fe_best_guess(theta, theta + eps)) / eps**2
        pairs.append((abs(ratio / h_func(theta) - 1), 0.01))
    return [CheckRecord.worst("ad41.quadratic_gap", pairs)]


@check("ad41.series_fits", "拟合系数: 信道适配 −1.5，不完全知识线性项 −0.25")
def _series_fits(ctx: VerifyContext) -> list[CheckRecord]:
    window = fit_window()
    adapted = fit_series(window, [fe_optimal(t) for t in window])
    incomplete = fit_series(window, [incomplete_exact(t) for t in window])
    return [
        tolerance_record("ad41.channel_adapted_fit", adapted.coefficients[2] + 1.5, tol=0.05),
        tolerance_record("ad41.incomplete_fit", incomplete.coefficients[1] + 0.25, tol=0.02),
    ]


# ---------------------------------------------------------------- spectator


@check("spectator.g_equals_h", "g_numeric(fe_best_guess) = h(θ)")
def _g_equals_h(ctx: VerifyContext) -> list[CheckRecord]:
    pairs = [
        (abs(g_numeric(fe_best_guess, theta) - h_func(theta)), 1e-5)
        for theta in np.round(np.arange(0.05, 0.96, 0.05), 10)
    ]
    return [CheckRecord.worst("spectator.g_equals_h", pairs)]


@check("spectator.monte_carlo", "平均保真度损失 = g·Var（Monte Carlo）")
def _monte_carlo(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("spectator.monte_carlo")
    cfg = SpectatorConfig(gamma=1.0, m_qubits=1)
    pairs = []
    for theta in (0.1, 0.3, 0.5):
        result = monte_carlo_gap(theta, cfg, ctx.count(100_000, 10_000), rng)
        pairs.append((abs(result.mean_gap - result.predicted), result.allowance))
    return [CheckRecord.worst("spectator.monte_carlo", pairs)]


@check("spectator.m_scaling", "平均损失严格按 1/M 缩放")
def _m_scaling(ctx: VerifyContext) -> list[CheckRecord]:
    pairs = []
    for theta in (0.1, 0.3, 0.5):
        one = mean_delta_fe(theta, SpectatorConfig(1.0, 1))
        ten = mean_delta_fe(theta, SpectatorConfig(1.0, 10))
        pairs.append((abs(10 * ten / one - 1), 1e-12))
    return [CheckRecord.worst("spectator.m_scaling", pairs)]


@check("spectator.gamma_monotone", "f_γ(1−f_γ) 随 γ 递增的区域内，平均损失随 γ 不减")
def _gamma_monotone(ctx: VerifyContext) -> list[CheckRecord]:
    gammas = np.linspace(1.0, 10.0, ctx.count(37, 10))
    pairs = []
    for theta in np.round(np.arange(0.02, 0.99, 0.04), 10):
        domain = gamma_monotone_domain(theta, gammas)
        losses = [mean_delta_fe(theta, SpectatorConfig(gamma=g)) for g in domain]
        pairs.extend((lo, hi + 1e-15) for lo, hi in zip(losses, losses[1:]))
    return [CheckRecord.worst("spectator.gamma_monotone", pairs)]


# ---------------------------------------------------------------- multicycle


@check("multicycle.composite_bound", "F_e(S∘Q) ≤ cos²(|δ^S − δ^Q|)")
def _composite(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("multicycle.composite_bound")
    pairs, chain_pairs = [], []
    for _ in range(ctx.count(500, 50)):
        d = int(rng.choice([2, 3, 4]))
        report = composite_chi00_check(_random(rng, d), _random(rng, d))
        pairs.append((report.actual, report.bound + 1e-10))
    for _ in range(ctx.count(100, 10)):
        d = int(rng.choice([2, 3, 4]))
        a, b, c = (_random(rng, d) for _ in range(3))
        report = composite_chi00_check(compose(b, a), c)
        chain_pairs.append((report.actual, report.bound + 1e-10))
    return [
        CheckRecord.worst("multicycle.composite_bound", pairs),
        CheckRecord.worst("multicycle.composite_chain", chain_pairs),
    ]


@check("multicycle.saturation", "对齐的对易酉信道使界取等")
def _saturation(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("multicycle.saturation")
    pairs = []
    for _ in range(ctx.count(50, 10)):
        a, b = rng.uniform(0, np.pi / 2, size=2)
        q = unitary_channel(expm(1j * a * PAULI_Z))
        s = unitary_channel(expm(-1j * b * PAULI_Z))
        report = composite_chi00_check(q, s)
        pairs.append((abs(report.actual - report.bound), 1e-10))
    return [CheckRecord.worst("multicycle.saturation", pairs)]


@check("multicycle.symmetry", "recurrence_upper 对称")
def _symmetry(ctx: VerifyContext) -> list[CheckRecord]:
    rng = ctx.rng("multicycle.symmetry")
    pairs = []
    for f, g in rng.uniform(0, 1, size=(ctx.count(200, 20), 2)):
        pairs.append((abs(recurrence_upper(f, g) - recurrence_upper(g, f)), 0.0))
    return [CheckRecord.worst("multicycle.symmetry", pairs)]


@check("multicycle.advantage_regions", "每个前序保真度都存在相干增强区域")
def _advantage(ctx: VerifyContext) -> list[CheckRecord]:
    rows = fig4_data((0.99, 0.97, 0.95), theta_grid())
    records = []
    for fe_prev in (0.99, 0.97, 0.95):
        flagged = sum(1 for r in rows if r.fe_prev == fe_prev and r.advantage_flag)
        records.append(CheckRecord.at_most(f"multicycle.advantage_regions[{fe_prev}]", 1, flagged))
    return records


@check("multicycle.spectator_limit", "M → ∞ 时旁观者项趋于 0")
def _spectator_limit(ctx: VerifyContext) -> list[CheckRecord]:
    term = spectator_multicycle_term(0.1, 0.97, SpectatorConfig(1.0, 10**8))
    return [tolerance_record("multicycle.spectator_limit", term, tol=1e-9)]


# ---------------------------------------------------------------- reports


@check("reports.crossing", "不完全知识曲线与 leung 展开的交点")
def _crossing(ctx: VerifyContext) -> list[CheckRecord]:
    result = fig5_data()
    series = result.crossing_series if result.crossing_series is not None else float("inf")
    exact = result.crossing_exact if result.crossing_exact is not None else float("inf")
    return [
        tolerance_record("reports.crossing_series", series - 0.17, tol=0.02),
        CheckRecord.at_most("reports.crossing_exact_low", 0.13, exact),
        CheckRecord.at_most("reports.crossing_exact_high", exact, 0.19),
    ]


@check("reports.fidelity_columns", "图表保真度列有限且位于 [0, 1]")
def _columns(ctx: VerifyContext) -> list[CheckRecord]:
    values = [v for r in fig3_data((1.0, 2.0, 5.0, 10.0), theta_grid()) for v in (r.fe_perfect, r.fe_incomplete)]
    values += [v for r in fig4_data((0.99, 0.97, 0.95), theta_grid()) for v in (r.bound_perfect, r.bound_incomplete)]
    values += [v for row in fig5_data().rows for v in row[1:]]
    finite = all(np.isfinite(values))
    pairs = [(-v, 0.0) for v in values] + [(v, 1.0) for v in values]
    record = CheckRecord.worst("reports.fidelity_columns", pairs)
    if not finite:
        return [CheckRecord(record.name, record.lhs, record.rhs, record.margin, False, "存在非有限值")]
    return [record]
