"""Additive upper bounds for single- and multi-cycle recovery with estimated noise."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from src.bounds.diamond import diamond_lower_estimate, diamond_upper_choi
from src.channels.channel import QuantumChannel, compose
from src.core.config import DiamondOptions
from src.core.constants import TOL_REPORT
from src.core.exceptions import DomainError


@dataclass(frozen=True)
class UpperBoundReport:
    epsilon_theta: float
    channel_gap: float
    total: float
    per_cycle: tuple[float, ...]


def _nonneg(name: str, values: Sequence[float]) -> None:
    if any(v < 0 for v in values):
        raise DomainError(f"{name} 必须全部非负")


def chaining_upper_single(noise_gap: float, eps_guess: float) -> float:
    """D(N_θ, N_θ̂) + ε_θ̂"""
    _nonneg("输入", (noise_gap, eps_guess))
    return noise_gap + eps_guess


def chaining_upper_multi(gaps: Sequence[float], eps: Sequence[float]) -> UpperBoundReport:
    if len(gaps) != len(eps):
        raise DomainError(f"gaps 与 eps 长度不一致: {len(gaps)} != {len(eps)}")
    _nonneg("gaps", gaps)
    _nonneg("eps", eps)
    per_cycle = tuple(g + e for g, e in zip(gaps, eps))
    return UpperBoundReport(
        epsilon_theta=float(sum(eps)),
        channel_gap=float(sum(gaps)),
        total=float(sum(per_cycle)),
        per_cycle=per_cycle,
    )


@dataclass(frozen=True)
class ChainingReport:
    lhs: float
    rhs: float
    holds: bool


def check_chaining(
    q: QuantumChannel,
    q2: QuantumChannel,
    s: QuantumChannel,
    s2: QuantumChannel,
    opts: DiamondOptions | None = None,
) -> ChainingReport:
    """D(S∘Q, S′∘Q′) ≤ D(Q, Q′) + D(S, S′)；左侧为估计值，右侧为 Choi 上界"""
    lhs = diamond_lower_estimate(compose(s, q), compose(s2, q2), opts).value
    rhs = diamond_upper_choi(q, q2) + diamond_upper_choi(s, s2)
    return ChainingReport(lhs=lhs, rhs=rhs, holds=lhs <= rhs + TOL_REPORT)
