"""Choi matrix conversions.

Ordering convention: reference system first, channel output second, so that
Γ^Q = Σ_ij |i⟩⟨j| ⊗ Q(|i⟩⟨j|) and |Γ⟩ = Σ_i |i⟩|i⟩.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.channels.channel import QuantumChannel
from src.core.constants import TOL_CPTP, TOL_PSD
from src.core.exceptions import DimensionError, NotCPTPError


@dataclass(frozen=True, eq=False)
class ChoiMatrix:
    d_in: int
    d_out: int
    mat: np.ndarray

    def __post_init__(self):
        size = self.d_in * self.d_out
        if self.mat.shape != (size, size):
            raise DimensionError(f"Choi 矩阵形状 {self.mat.shape} 与 {size}x{size} 不符")

    def partial_trace_output(self) -> np.ndarray:
        """Tr_out Γ，保迹信道应为 I_{d_in}"""
        blocks = self.mat.reshape(self.d_in, self.d_out, self.d_in, self.d_out)
        return np.einsum("iaja->ij", blocks)

    def is_trace_preserving(self, tol: float = TOL_CPTP) -> bool:
        residual = np.abs(self.partial_trace_output() - np.eye(self.d_in)).max()
        return bool(residual <= tol)


def _kraus_vector(k: np.ndarray) -> np.ndarray:
    # (id⊗K)|Γ⟩ 的分量 (i, a) = K[a, i]
    return k.T.reshape(-1)


def kraus_to_choi(ch: QuantumChannel) -> ChoiMatrix:
    vecs = np.stack([_kraus_vector(k) for k in ch.kraus], axis=1)
    mat = vecs @ vecs.conj().T
    return ChoiMatrix(ch.d_in, ch.d_out, (mat + mat.conj().T) / 2)


def choi_to_kraus(choi: ChoiMatrix, tol_psd: float = TOL_PSD) -> QuantumChannel:
    """通过 Choi 矩阵的本征分解得到 Kraus 算子（数量 ≤ d_in·d_out）"""
    herm = (choi.mat + choi.mat.conj().T) / 2
    evals, evecs = np.linalg.eigh(herm)
    if evals.min() < tol_psd * max(1.0, abs(evals).max()):
        raise NotCPTPError(f"Choi 矩阵非半正定，最小本征值 {evals.min():.3e}")
    cutoff = max(abs(evals).max(), 1.0) * 1e-14
    ops = [
        np.sqrt(lam) * vec.reshape(choi.d_in, choi.d_out).T
        for lam, vec in zip(evals[::-1], evecs.T[::-1])
        if lam > cutoff
    ]
    if not ops:
        ops = [np.zeros((choi.d_out, choi.d_in), dtype=complex)]
    return QuantumChannel(choi.d_in, choi.d_out, tuple(ops))


def choi_distance(a: QuantumChannel, b: QuantumChannel) -> float:
    """两个信道 Choi 矩阵之差的最大绝对元素"""
    ca, cb = kraus_to_choi(a), kraus_to_choi(b)
    if ca.mat.shape != cb.mat.shape:
        raise DimensionError("信道维度不一致，无法比较 Choi 矩阵")
    return float(np.abs(ca.mat - cb.mat).max())


def max_entangled_vector(d: int) -> np.ndarray:
    """归一化最大纠缠态 |Φ⟩ = |Γ⟩/√d"""
    return np.eye(d, dtype=complex).reshape(-1) / np.sqrt(d)
