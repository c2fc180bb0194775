"""Channel twirling over finite unitary ensembles and the analytic Haar twirl."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from src.bounds.diamond import diamond_lower_estimate
from src.channels.channel import QuantumChannel, prune, require_square
from src.channels.library import depolarizing, unitary_error_basis
from src.core.config import DiamondOptions
from src.core.constants import PRUNE_TOL, TOL_REPORT
from src.core.exceptions import DimensionError, DomainError
from src.metrics.fidelity import entanglement_fidelity
from src.utils.logger import get_logger

logger = get_logger("twirl")

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PHASE_S = np.diag([1, 1j]).astype(complex)


@dataclass(frozen=True, eq=False)
class UnitaryEnsemble:
    """带权重的酉算子集合"""
    unitaries: tuple[np.ndarray, ...]
    weights: np.ndarray
    name: str = field(default="custom")

    def __post_init__(self):
        if not self.unitaries:
            raise DomainError("酉系综不能为空")
        ops = tuple(np.asarray(u, dtype=complex) for u in self.unitaries)
        d = ops[0].shape[0]
        for u in ops:
            if u.shape != (d, d):
                raise DimensionError(f"系综元素形状 {u.shape} 与 {d}x{d} 不符")
            if np.abs(u.conj().T @ u - np.eye(d)).max() > 1e-10:
                raise DomainError("系综包含非酉元素")
        weights = np.asarray(self.weights, dtype=float)
        if weights.shape != (len(ops),) or (weights < 0).any():
            raise DomainError("系综权重必须为非负且与元素数量一致")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise DomainError(f"系综权重之和为 {weights.sum():.15g}，应为 1")
        object.__setattr__(self, "unitaries", ops)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, unitaries: Sequence[np.ndarray], name: str = "custom") -> "UnitaryEnsemble":
        n = len(unitaries)
        return cls(tuple(unitaries), np.full(n, 1.0 / n), name)

    @property
    def d(self) -> int:
        return self.unitaries[0].shape[0]

    def __len__(self) -> int:
        return len(self.unitaries)

    def average_state(self, rho: np.ndarray) -> np.ndarray:
        """Σ p_x U_x ρ U_x†"""
        return sum(w * u @ rho @ u.conj().T for w, u in zip(self.weights, self.unitaries))


def twirl_discrete(ch: QuantumChannel, ensemble: UnitaryEnsemble) -> QuantumChannel:
    """Σ p_x U_x† ∘ Q ∘ U_x，Kraus 集合为 √p_x U_x† K U_x"""
    d = require_square(ch)
    if ensemble.d != d:
        raise DimensionError(f"系综维度 {ensemble.d} 与信道维度 {d} 不符")
    ops = tuple(
        np.sqrt(w) * u.conj().T @ k @ u
        for w, u in zip(ensemble.weights, ensemble.unitaries)
        if w > 0
        for k in ch.kraus
    )
    return prune(QuantumChannel(d, d, ops), PRUNE_TOL)


def pauli_ensemble(n_qubits: int) -> UnitaryEnsemble:
    if not (1 <= n_qubits <= 3):
        raise DomainError(f"Pauli 系综仅支持 1-3 个量子比特，得到 {n_qubits}")
    _, ops = unitary_error_basis(2**n_qubits)
    return UnitaryEnsemble.uniform(ops, name=f"pauli{n_qubits}")


def clifford_ensemble_1q() -> UnitaryEnsemble:
    """单比特 Clifford 群（模去全局相位）的 24 个元素: P·(HS)^a·H^b"""
    _, paulis = unitary_error_basis(2)
    hs = HADAMARD @ PHASE_S
    cosets = [
        np.linalg.matrix_power(hs, a) @ np.linalg.matrix_power(HADAMARD, b)
        for a, b in itertools.product(range(3), range(2))
    ]
    return UnitaryEnsemble.uniform([p @ c for p in paulis for c in cosets], name="clifford1")


def depolarizing_parameter(ch: QuantumChannel) -> float:
    """Haar 平均后的去极化参数 p = d(1−F_avg)/(d−1) = d²(1−F_e)/(d²−1)"""
    d = require_square(ch)
    return d * d * (1.0 - entanglement_fidelity(ch)) / (d * d - 1)


def haar_twirl_analytic(ch: QuantumChannel) -> QuantumChannel:
    d = require_square(ch)
    return depolarizing(d, depolarizing_parameter(ch), extended=True)


@dataclass(frozen=True)
class TwirlDPIReport:
    lhs: float
    rhs: float
    holds: bool


def check_twirl_dpi(
    q: QuantumChannel,
    s: QuantumChannel,
    ensemble: UnitaryEnsemble,
    opts: DiamondOptions | None = None,
) -> TwirlDPIReport:
    """D(Q,S) ≥ D(twirl Q, twirl S)，两侧均用菱形距离估计"""
    require_square(q, s)
    lhs = diamond_lower_estimate(q, s, opts).value
    rhs = diamond_lower_estimate(twirl_discrete(q, ensemble), twirl_discrete(s, ensemble), opts).value
    holds = lhs >= rhs - TOL_REPORT
    if not holds:
        logger.warning(f"扭曲后的距离 {rhs:.8f} 超过原距离 {lhs:.8f}（系综 {ensemble.name}）")
    return TwirlDPIReport(lhs=lhs, rhs=rhs, holds=holds)
