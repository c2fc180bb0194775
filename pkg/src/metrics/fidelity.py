"""State and channel fidelities, distances and the error angle."""
from __future__ import annotations

import numpy as np

from src.channels.channel import QuantumChannel, require_square
from src.channels.choi import kraus_to_choi
from src.core.constants import TOL_CPTP, TOL_PSD
from src.core.exceptions import DimensionError, DomainError, StateError


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    herm = (rho + rho.conj().T) / 2
    evals, evecs = np.linalg.eigh(herm)
    if evals.min() < TOL_PSD:
        raise StateError(f"输入不是半正定矩阵，最小本征值 {evals.min():.3e}")
    return (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T


def _pair(rho: np.ndarray, sigma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape or rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"状态维度不一致: {rho.shape} vs {sigma.shape}")
    return rho, sigma


def state_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """F(ρ,σ) = ‖√ρ√σ‖₁²"""
    rho, sigma = _pair(rho, sigma)
    root = _psd_sqrt(rho)
    _psd_sqrt(sigma)
    inner = root @ sigma @ root
    evals = np.linalg.eigvalsh((inner + inner.conj().T) / 2)
    value = float(np.sqrt(np.clip(evals, 0.0, None)).sum() ** 2)
    return min(max(value, 0.0), 1.0)


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """½‖ρ−σ‖₁，由 Hermitian 本征值计算"""
    rho, sigma = _pair(rho, sigma)
    diff = rho - sigma
    return float(0.5 * np.abs(np.linalg.eigvalsh((diff + diff.conj().T) / 2)).sum())


def bures_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    return float(np.sqrt(max(2.0 * (1.0 - np.sqrt(state_fidelity(rho, sigma))), 0.0)))


def bures_angle(rho: np.ndarray, sigma: np.ndarray) -> float:
    return float(np.arccos(np.sqrt(state_fidelity(rho, sigma))))


def entanglement_fidelity(ch: QuantumChannel) -> float:
    """F_e = ⟨Φ|(id⊗Q)(Φ)|Φ⟩（Choi 路径）"""
    d = require_square(ch)
    gamma = np.eye(d, dtype=complex).reshape(-1)
    value = (gamma.conj() @ kraus_to_choi(ch).mat @ gamma).real / d**2
    return float(np.clip(value, 0.0, 1.0))


def entanglement_fidelity_kraus(ch: QuantumChannel) -> float:
    """F_e = (1/d²) Σ|Tr Q_i|²"""
    d = require_square(ch)
    return float(sum(abs(np.trace(k)) ** 2 for k in ch.kraus) / d**2)


def average_from_entanglement(fe: float, d: int) -> float:
    """Horodecki 关系 F_avg = (d·F_e + 1)/(d + 1)"""
    if not (-TOL_CPTP <= fe <= 1 + TOL_CPTP):
        raise DomainError(f"F_e={fe} 不在 [0, 1] 内")
    return (d * fe + 1) / (d + 1)


def entanglement_from_average(f_avg: float, d: int) -> float:
    return ((d + 1) * f_avg - 1) / d


def average_fidelity(ch: QuantumChannel) -> float:
    return average_from_entanglement(entanglement_fidelity(ch), ch.d_in)


def angle_from_fidelity(fe: float) -> float:
    """δ = arccos √F_e"""
    if not (-TOL_CPTP <= fe <= 1 + TOL_CPTP):
        raise DomainError(f"F_e={fe} 不在 [0, 1] 内")
    return float(np.arccos(np.sqrt(min(max(fe, 0.0), 1.0))))


def error_angle(ch: QuantumChannel) -> float:
    return angle_from_fidelity(entanglement_fidelity(ch))
