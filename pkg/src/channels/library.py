"""Standard channel families and the seeded random-channel generator."""
from __future__ import annotations

import itertools
from functools import lru_cache, reduce

import numpy as np

from src.channels.channel import QuantumChannel
from src.core.exceptions import DimensionError, DomainError
from src.utils.rng import complex_gaussian

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"I": PAULI_I, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


def pauli_string(label: str) -> np.ndarray:
    """例如 'XXII' -> X⊗X⊗I⊗I"""
    try:
        return reduce(np.kron, (PAULIS[c] for c in label.upper()))
    except KeyError as e:
        raise DomainError(f"无效的 Pauli 字符串: {label}") from e


def _qubit_count(d: int) -> int | None:
    n = d.bit_length() - 1
    return n if d == 1 << n else None


@lru_cache(maxsize=None)
def _unitary_error_basis(d: int) -> tuple[str, tuple[np.ndarray, ...]]:
    n = _qubit_count(d)
    if n is not None and n >= 1:
        labels = ("".join(p) for p in itertools.product("IXYZ", repeat=n))
        return "pauli", tuple(pauli_string(label) for label in labels)
    # 广义 Pauli（Weyl）算子 X^a Z^b
    shift = np.roll(np.eye(d, dtype=complex), 1, axis=0)
    clock = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    ops = tuple(
        np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
        for a in range(d)
        for b in range(d)
    )
    return "weyl", ops


def unitary_error_basis(d: int) -> tuple[str, tuple[np.ndarray, ...]]:
    """d² 个互相正交的酉算子，第一个为单位阵

    d 为 2 的幂时取 Pauli 串，否则取 Weyl 算子。
    """
    if d < 2:
        raise DimensionError(f"维度必须 ≥ 2，得到 {d}")
    return _unitary_error_basis(d)


def depolarizing(d: int, p: float, extended: bool = False) -> QuantumChannel:
    """(1−p)ρ + p·I/d

    extended=True 时允许 p 取到 d²/(d²−1)，即纠缠保真度降到 0（Haar 平均的值域）。
    """
    if d < 2:
        raise DimensionError(f"维度必须 ≥ 2，得到 {d}")
    p_max = d * d / (d * d - 1) if extended else 1.0
    if not (0.0 <= p <= p_max + 1e-15):
        raise DomainError(f"去极化参数 p={p} 不在 [0, {p_max:.6g}] 内")
    p = min(p, p_max)
    _, ops = unitary_error_basis(d)
    w_identity = max(1.0 - p + p / d**2, 0.0)
    w_error = p / d**2
    kraus = [np.sqrt(w_identity) * ops[0]] + [np.sqrt(w_error) * u for u in ops[1:]]
    return QuantumChannel(d, d, tuple(kraus))


def amplitude_damping(theta: float) -> QuantumChannel:
    """N0 = diag(1, √(1−θ))，N1 = √θ |0⟩⟨1|"""
    if not (0.0 <= theta <= 1.0):
        raise DomainError(f"阻尼参数 θ={theta} 不在 [0, 1] 内")
    n0 = np.array([[1, 0], [0, np.sqrt(1 - theta)]], dtype=complex)
    n1 = np.array([[0, np.sqrt(theta)], [0, 0]], dtype=complex)
    return QuantumChannel(2, 2, (n0, n1))


def theta_from_time(t: float, t1: float) -> float:
    """θ = 1 − exp(−t/T1)"""
    if t < 0 or t1 <= 0:
        raise DomainError(f"需要 t ≥ 0 且 T1 > 0，得到 t={t}, T1={t1}")
    return float(-np.expm1(-t / t1))


def random_channel(d_in: int, d_out: int, kraus_count: int, seed: int) -> QuantumChannel:
    """高斯块矩阵正交化为 Stinespring 等距后切分为 Kraus 算子"""
    if d_in < 1 or d_out < 1:
        raise DimensionError(f"无效的维度: {d_in}->{d_out}")
    if not (1 <= kraus_count <= d_in * d_out):
        raise DomainError(f"Kraus 数量 {kraus_count} 不在 [1, {d_in * d_out}] 内")
    if kraus_count * d_out < d_in:
        raise DimensionError(f"{kraus_count} 个 {d_out}x{d_in} Kraus 算子无法构成等距")
    rng = np.random.default_rng(seed)
    block = complex_gaussian(rng, (kraus_count * d_out, d_in))
    q, r = np.linalg.qr(block)
    # 固定 QR 的相位自由度，使结果只依赖于种子
    phases = np.diag(r) / np.abs(np.diag(r))
    iso = q * phases
    kraus = tuple(iso[i * d_out:(i + 1) * d_out, :] for i in range(kraus_count))
    return QuantumChannel(d_in, d_out, kraus)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(complex_gaussian(rng, (d, d)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    g = complex_gaussian(rng, (d, rank or d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
