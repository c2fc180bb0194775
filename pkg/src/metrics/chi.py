"""χ-matrix representation in the normalized error basis B_k = U_k/√d (B_0 = I/√d).

Every Kraus operator expands as Q_i = Σ_k c_ik B_k; the χ matrix is
χ_kl = Σ_i c_ik c̄_il, so that χ_00/d equals the entanglement fidelity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from src.channels.channel import QuantumChannel, require_square
from src.channels.library import unitary_error_basis
from src.channels.serialize import matrix_to_json
from src.core.constants import TOL_CPTP


def operator_basis(d: int) -> tuple[str, np.ndarray]:
    """归一化算子基，形状 (d², d, d)"""
    basis_id, ops = unitary_error_basis(d)
    return basis_id, np.stack(ops) / np.sqrt(d)


def basis_coefficients(k: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """c_k = ⟨B_k, K⟩ = Tr(B_k† K)"""
    return np.einsum("kab,ab->k", basis.conj(), k)


@dataclass(frozen=True, eq=False)
class ChiMatrix:
    d: int
    basis_id: str
    mat: np.ndarray

    @property
    def chi00(self) -> float:
        return float(self.mat[0, 0].real)

    def tp_residual(self) -> float:
        """‖Σ χ_kl B_l† B_k − I‖∞"""
        _, basis = operator_basis(self.d)
        total = np.einsum("kl,lba,kbc->ac", self.mat, basis.conj(), basis)
        return float(np.linalg.norm(total - np.eye(self.d), ord=np.inf))

    def is_trace_preserving(self, tol: float = TOL_CPTP) -> bool:
        return self.tp_residual() <= tol

    def off_diagonal_max(self) -> float:
        return float(np.abs(self.mat - np.diag(np.diag(self.mat))).max())


def chi_matrix(ch: QuantumChannel) -> ChiMatrix:
    d = require_square(ch)
    basis_id, basis = operator_basis(d)
    coeffs = np.stack([basis_coefficients(k, basis) for k in ch.kraus])
    mat = coeffs.T @ coeffs.conj()
    return ChiMatrix(d, basis_id, (mat + mat.conj().T) / 2)


def chi00(ch: QuantumChannel) -> float:
    """χ_00 = (1/d) Σ|Tr Q_i|²"""
    d = require_square(ch)
    return float(sum(abs(np.trace(k)) ** 2 for k in ch.kraus) / d)


def chi_to_json(chi: ChiMatrix) -> dict[str, Any]:
    return {"d": chi.d, "basis_id": chi.basis_id, "mat": matrix_to_json(chi.mat)}


@dataclass(frozen=True, eq=False)
class KrausAngle:
    """Q_i = e^{i·phase} q (cos φ B_0 + sin φ Σ v_k B_k)"""
    q: float
    phi: float
    v: np.ndarray
    phase: float


@dataclass(frozen=True, eq=False)
class KrausAngleDecomposition:
    d: int
    basis_id: str
    entries: tuple[KrausAngle, ...]

    def reconstruct(self, index: int, gauged: bool = True) -> np.ndarray:
        """由 (q, φ, v) 重建第 index 个 Kraus 算子"""
        e = self.entries[index]
        _, basis = operator_basis(self.d)
        coeffs = e.q * np.concatenate(([np.cos(e.phi)], np.sin(e.phi) * e.v))
        op = np.einsum("k,kab->ab", coeffs, basis)
        return op if gauged else np.exp(1j * e.phase) * op

    def weight_sum(self) -> float:
        """Σ q_i²，保迹信道等于 d"""
        return float(sum(e.q**2 for e in self.entries))

    def chi00(self) -> float:
        return float(sum(e.q**2 * np.cos(e.phi) ** 2 for e in self.entries))


def kraus_angle_decomposition(ch: QuantumChannel, tol: float = 1e-14) -> KrausAngleDecomposition:
    """逐个 Kraus 算子分解为 (q, φ, v)，相位规范使 ⟨B_0, Q_i⟩ ≥ 0

    范数低于 tol 的 Kraus 算子不参与分解。
    """
    d = require_square(ch)
    basis_id, basis = operator_basis(d)
    entries = []
    for k in ch.kraus:
        c = basis_coefficients(k, basis)
        q = float(np.linalg.norm(c))
        if q < tol:
            continue
        phase = float(np.angle(c[0])) if abs(c[0]) > tol else 0.0
        c = c * np.exp(-1j * phase)
        phi = float(np.arctan2(np.linalg.norm(c[1:]), c[0].real))
        rest = c[1:]
        if np.linalg.norm(rest) > tol:
            v = rest / np.linalg.norm(rest)
        else:
            # φ = 0 时 v 不影响重建，取第一个误差方向
            v = np.zeros(d * d - 1, dtype=complex)
            v[0] = 1.0
        entries.append(KrausAngle(q=q, phi=phi, v=v, phase=phase))
    return KrausAngleDecomposition(d, basis_id, tuple(entries))
