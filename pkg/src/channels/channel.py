"""Kraus-form quantum channels: construction, action, composition and CPTP checks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from src.core.constants import DIM_CAP, TOL_CPTP, TOL_PSD
from src.core.exceptions import DimensionError, DomainError, NotCPTPError, StateError


def _frozen(matrix: np.ndarray) -> np.ndarray:
    arr = np.array(matrix, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class QuantumChannel:
    """以 Kraus 算子表示的量子信道（构造后不可变）"""
    d_in: int
    d_out: int
    kraus: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.d_in < 1 or self.d_out < 1:
            raise DimensionError(f"无效的维度: {self.d_in}->{self.d_out}")
        if not self.kraus:
            raise DomainError("Kraus 列表不能为空")
        ops = tuple(_frozen(k) for k in self.kraus)
        for k in ops:
            if k.shape != (self.d_out, self.d_in):
                raise DimensionError(
                    f"Kraus 算子形状 {k.shape} 与 {self.d_out}x{self.d_in} 不符"
                )
            if not np.all(np.isfinite(k)):
                raise DomainError("Kraus 算子包含 NaN/Inf")
        object.__setattr__(self, "kraus", ops)

    @classmethod
    def from_kraus(
        cls,
        kraus: Sequence[np.ndarray],
        validate: bool = True,
        tol: float = TOL_CPTP,
    ) -> "QuantumChannel":
        """由 Kraus 列表构造信道，默认校验保迹性"""
        ops = [np.atleast_2d(np.asarray(k, dtype=complex)) for k in kraus]
        if not ops:
            raise DomainError("Kraus 列表不能为空")
        d_out, d_in = ops[0].shape
        ch = cls(d_in=d_in, d_out=d_out, kraus=tuple(ops))
        if validate:
            report = validate_cptp(ch, tol)
            if not report.passed:
                raise NotCPTPError(f"保迹残差 {report.tp_residual:.3e} 超过容差 {tol:.1e}")
        return ch

    @property
    def is_square(self) -> bool:
        return self.d_in == self.d_out

    @property
    def kraus_count(self) -> int:
        return len(self.kraus)


@dataclass(frozen=True)
class CPTPReport:
    tp_residual: float
    psd_min_eigenvalue: float
    passed: bool


def identity_channel(d: int) -> QuantumChannel:
    return QuantumChannel(d, d, (np.eye(d),))


def unitary_channel(u: np.ndarray) -> QuantumChannel:
    u = np.asarray(u, dtype=complex)
    return QuantumChannel.from_kraus([u])


def isometry_channel(v: np.ndarray) -> QuantumChannel:
    """ρ -> VρV†，V 为 d_out×d_in 等距"""
    return QuantumChannel.from_kraus([np.asarray(v, dtype=complex)])


def validate_cptp(ch: QuantumChannel, tol: float = TOL_CPTP) -> CPTPReport:
    """报告保迹残差 ‖ΣK†K − I‖∞ 与 Choi 矩阵最小本征值"""
    from src.channels.choi import kraus_to_choi

    gram = sum(k.conj().T @ k for k in ch.kraus)
    tp_residual = float(np.linalg.norm(gram - np.eye(ch.d_in), ord=np.inf))
    psd_min = float(np.linalg.eigvalsh(kraus_to_choi(ch).mat).min())
    passed = tp_residual <= tol and psd_min >= TOL_PSD
    return CPTPReport(tp_residual=tp_residual, psd_min_eigenvalue=psd_min, passed=passed)


def check_density(rho: np.ndarray, tol: float = TOL_CPTP) -> np.ndarray:
    """校验密度矩阵：Hermitian、半正定、单位迹"""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise StateError(f"密度矩阵必须为方阵，得到 {rho.shape}")
    if not np.allclose(rho, rho.conj().T, atol=tol):
        raise StateError("密度矩阵不是 Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise StateError(f"密度矩阵迹为 {np.trace(rho).real:.6g}")
    if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < TOL_PSD:
        raise StateError("密度矩阵不是半正定")
    return rho


def apply(ch: QuantumChannel, rho: np.ndarray, strict: bool = True) -> np.ndarray:
    """Q(ρ) = Σ K ρ K†"""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (ch.d_in, ch.d_in):
        raise DimensionError(f"输入维度 {rho.shape} 与信道输入 {ch.d_in} 不符")
    if strict:
        check_density(rho)
    return sum(k @ rho @ k.conj().T for k in ch.kraus)


def apply_adjoint(ch: QuantumChannel, m: np.ndarray) -> np.ndarray:
    """伴随映射 Q†(M) = Σ K† M K"""
    m = np.asarray(m, dtype=complex)
    if m.shape != (ch.d_out, ch.d_out):
        raise DimensionError(f"输入维度 {m.shape} 与信道输出 {ch.d_out} 不符")
    return sum(k.conj().T @ m @ k for k in ch.kraus)


def compose(outer: QuantumChannel, inner: QuantumChannel) -> QuantumChannel:
    """outer∘inner，Kraus 集合为全部乘积 {S_j Q_i}"""
    if inner.d_out != outer.d_in:
        raise DimensionError(f"无法复合: inner 输出 {inner.d_out} != outer 输入 {outer.d_in}")
    ops = tuple(s @ q for s in outer.kraus for q in inner.kraus)
    return QuantumChannel(inner.d_in, outer.d_out, ops)


def tensor(a: QuantumChannel, b: QuantumChannel, cap: int = DIM_CAP) -> QuantumChannel:
    d_in, d_out = a.d_in * b.d_in, a.d_out * b.d_out
    if max(d_in, d_out) > cap:
        raise DimensionError(f"张量积维度 {d_in}->{d_out} 超过上限 {cap}")
    ops = tuple(np.kron(ka, kb) for ka in a.kraus for kb in b.kraus)
    return QuantumChannel(d_in, d_out, ops)


def tensor_power(ch: QuantumChannel, n: int, cap: int = DIM_CAP) -> QuantumChannel:
    if n < 1:
        raise DomainError(f"张量幂次数必须 ≥ 1，得到 {n}")
    return reduce(lambda acc, _: tensor(acc, ch, cap), range(n - 1), ch)


def prune(ch: QuantumChannel, tol: float) -> QuantumChannel:
    """去掉范数低于 tol 的 Kraus 算子（至少保留一个）"""
    kept = tuple(k for k in ch.kraus if np.linalg.norm(k) >= tol)
    if not kept:
        kept = (ch.kraus[0],)
    return QuantumChannel(ch.d_in, ch.d_out, kept)


def require_square(*channels: QuantumChannel) -> int:
    """校验信道为同维方信道，返回维度"""
    dims = {(ch.d_in, ch.d_out) for ch in channels}
    if len(dims) != 1:
        raise DimensionError(f"信道维度不一致: {sorted(dims)}")
    d_in, d_out = dims.pop()
    if d_in != d_out:
        raise DimensionError(f"需要方信道，得到 {d_in}->{d_out}")
    return d_in
