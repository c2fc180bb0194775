"""Spectator dynamics, quantum Fisher information and QCRB-limited estimates of θ."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np
from scipy.stats import truncnorm

from src.codes.ad41 import fe_best_guess, fe_optimal, h_func
from src.core.exceptions import DomainError, QFIDivergenceError
from src.utils.logger import get_logger

logger = get_logger("spectator")


@dataclass(frozen=True)
class SpectatorConfig:
    """γ = T1(存储)/T1(旁观者)，M = 旁观者量子比特数"""
    gamma: float = 1.0
    m_qubits: int = 1

    def __post_init__(self):
        if self.gamma < 1:
            raise DomainError(f"γ={self.gamma} < 1，旁观者必须比存储比特衰减更快")
        if self.m_qubits < 1:
            raise DomainError(f"M={self.m_qubits} 至少为 1")


def f_gamma(theta: float, gamma: float) -> float:
    """f_γ(θ) = 1 − (1−θ)^γ"""
    if gamma < 1:
        raise DomainError(f"γ={gamma} < 1")
    if not (0.0 <= theta <= 1.0):
        raise DomainError(f"θ={theta} 不在 [0, 1] 内")
    if theta == 1.0:
        return 1.0
    return float(-np.expm1(gamma * np.log1p(-theta)))


def qfi_spectator(theta: float, cfg: SpectatorConfig) -> float:
    """M / (f(1−f))"""
    f = f_gamma(theta, cfg.gamma)
    spread = f * (1.0 - f)
    if spread <= 0.0:
        raise QFIDivergenceError(f"θ={theta} 处 f_γ={f}，量子 Fisher 信息发散")
    return cfg.m_qubits / spread


def qcrb_variance(theta: float, cfg: SpectatorConfig) -> float:
    return 1.0 / qfi_spectator(theta, cfg)


def limiting_variance(theta: float, cfg: SpectatorConfig) -> float:
    """f(1−f)/M，在 f ∈ {0, 1} 处连续延拓为 0"""
    f = f_gamma(theta, cfg.gamma)
    return f * (1.0 - f) / cfg.m_qubits


def g_numeric(
    fe: Callable[[float, float], float],
    theta: float,
    step: float = 1e-4,
    richardson: bool = False,
) -> float:
    """−½ ∂²/∂θ̂² fe(θ, θ̂) 在 θ̂ = θ 处的中心差分"""
    if step <= 0:
        raise DomainError(f"差分步长必须为正，得到 {step}")
    if not (step <= theta <= 1.0 - step):
        raise DomainError(f"θ={theta} 距边界不足一个步长 {step}")

    def second(h: float) -> float:
        values = (fe(theta, theta + h), fe(theta, theta), fe(theta, theta - h))
        if not all(np.isfinite(values)):
            raise DomainError(f"fe 在 θ={theta} 附近返回非有限值")
        return (values[0] - 2.0 * values[1] + values[2]) / h**2

    d2 = second(step)
    if richardson:
        d2 = (4.0 * second(step / 2) - d2) / 3.0
    return -0.5 * d2


def spread_gamma_slope(theta: float, gamma: float) -> float:
    """∂/∂γ [f(1−f)] = (1 − 2f)·(−(1−θ)^γ ln(1−θ))"""
    if not (0.0 < theta < 1.0):
        raise DomainError(f"θ={theta} 必须位于 (0, 1) 内")
    f = f_gamma(theta, gamma)
    return float((1.0 - 2.0 * f) * -((1.0 - theta) ** gamma) * np.log1p(-theta))


def gamma_monotone_domain(theta: float, gammas: Iterable[float]) -> list[float]:
    """f_γ(θ)(1−f_γ(θ)) 随 γ 递增的那部分 γ（按升序）"""
    return [g for g in sorted(float(g) for g in gammas) if spread_gamma_slope(theta, g) > 0.0]


def mean_delta_fe(theta: float, cfg: SpectatorConfig) -> float:
    """QCRB 饱和时的平均保真度损失 h(θ)·Var(θ̂)"""
    return h_func(theta) * qcrb_variance(theta, cfg)


@dataclass(frozen=True)
class EstimateModel:
    """θ̂ 的截断正态分布（截断前均值 θ、方差 variance，截断到 [0, 1]）"""
    theta: float
    variance: float

    def __post_init__(self):
        if not (0.0 < self.theta < 1.0):
            raise DomainError(f"θ={self.theta} 必须位于 (0, 1) 内")
        if not (self.variance >= 0.0 and np.isfinite(self.variance)):
            raise DomainError(f"方差 {self.variance} 无效")

    @classmethod
    def from_qcrb(cls, theta: float, cfg: SpectatorConfig, inflation: float = 1.0) -> "EstimateModel":
        """方差取 QCRB 下限乘以 inflation（≥ 1）"""
        if inflation < 1.0:
            raise DomainError(f"inflation={inflation} < 1 将违反 QCRB")
        return cls(theta, inflation * qcrb_variance(theta, cfg))

    @property
    def sigma(self) -> float:
        return float(np.sqrt(self.variance))

    def distribution(self):
        a, b = (0.0 - self.theta) / self.sigma, (1.0 - self.theta) / self.sigma
        return truncnorm(a, b, loc=self.theta, scale=self.sigma)

    @property
    def truncated_variance(self) -> float:
        """截断后的实际方差（严格小于 variance）"""
        if self.variance == 0.0:
            return 0.0
        return float(self.distribution().var())


def sample_estimate(
    model: EstimateModel,
    rng: np.random.Generator,
    size: int | None = None,
) -> float | np.ndarray:
    """逆 CDF 抽样"""
    if model.variance == 0.0:
        return model.theta if size is None else np.full(size, model.theta)
    u = rng.uniform(size=size)
    samples = np.clip(model.distribution().ppf(u), 0.0, 1.0)
    return float(samples) if size is None else samples


@dataclass(frozen=True)
class MonteCarloGap:
    theta: float
    mean_gap: float
    std_error: float
    variance: float
    predicted: float
    allowance: float

    @property
    def holds(self) -> bool:
        return abs(self.mean_gap - self.predicted) <= self.allowance


def monte_carlo_gap(
    theta: float,
    cfg: SpectatorConfig,
    samples: int,
    rng: np.random.Generator,
) -> MonteCarloGap:
    """⟨F_e(θ) − F_e(θ, θ̂)⟩ 与 g·Var(θ̂) 的比较

    方差取 θ̂ 相对 θ 的均方偏差；容差为 3 个标准误差加 Var^{3/2}。
    """
    model = EstimateModel.from_qcrb(theta, cfg)
    hats = sample_estimate(model, rng, samples)
    best = fe_optimal(theta)
    gaps = best - np.array([fe_best_guess(theta, float(t)) for t in hats])
    variance = float(np.mean((hats - theta) ** 2))
    g = g_numeric(fe_best_guess, theta)
    std_error = float(gaps.std(ddof=1) / np.sqrt(samples))
    result = MonteCarloGap(
        theta=theta,
        mean_gap=float(gaps.mean()),
        std_error=std_error,
        variance=variance,
        predicted=g * variance,
        allowance=3.0 * std_error + variance**1.5,
    )
    logger.debug(
        f"θ={theta}: 平均损失 {result.mean_gap:.6g}, 预测 {result.predicted:.6g}, 容差 {result.allowance:.3g}"
    )
    return result


@dataclass(frozen=True)
class Fig3Row:
    theta: float
    gamma: float
    m: int
    fe_perfect: float
    gap: float
    fe_incomplete: float


def fig3_data(gammas: Iterable[float], theta_grid: Iterable[float], m: int = 1) -> list[Fig3Row]:
    """每个 (γ, θ) 一行；f_γ 数值上到达 1 时损失取极限值 0"""
    rows = []
    grid = [float(t) for t in theta_grid]
    if any(not (0.0 < t < 1.0) for t in grid):
        raise DomainError("θ 网格必须位于 (0, 1) 内")
    for gamma in gammas:
        cfg = SpectatorConfig(gamma=float(gamma), m_qubits=m)
        for theta in grid:
            perfect = fe_optimal(theta)
            gap = h_func(theta) * limiting_variance(theta, cfg)
            rows.append(Fig3Row(theta, cfg.gamma, m, perfect, gap, perfect - gap))
    return rows
