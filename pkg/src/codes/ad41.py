"""The four-qubit amplitude-damping code.

Codewords |0_L⟩ = (|0000⟩+|1111⟩)/√2 and |1_L⟩ = (|0011⟩+|1100⟩)/√2, stabilized
by XXXX, ZZII and IIZZ. The channel-adapted recovery family is parameterized by
(|α|, ψ, φ) and evaluated in closed form; τ = 1 − θ throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np
from numpy.polynomial import polynomial as P

from src.channels.channel import QuantumChannel, compose, isometry_channel, tensor_power
from src.channels.library import amplitude_damping, pauli_string
from src.core.constants import SERIES_FIT_WINDOW
from src.core.exceptions import DomainError

N_QUBITS = 4

# 低阶展开系数 [c0, c1, c2]，F_e ≈ c0 + c1·θ + c2·θ²
SERIES = {
    "leung": (1.0, 0.0, -2.75),
    "channel_adapted": (1.0, 0.0, -1.5),
    "sdp": (1.0, 0.0, -1.25),
    "incomplete": (1.0, -0.25, -1.25),
}

SERIES_LABELS = {
    "leung": "1−2.75θ²",
    "channel_adapted": "1−1.5θ²",
    "sdp": "1−1.25θ²",
    "incomplete": "1−0.25θ−1.25θ²",
}


def _check_theta(theta: float) -> float:
    if not (0.0 <= theta <= 1.0):
        raise DomainError(f"θ={theta} 不在 [0, 1] 内")
    return float(theta)


@dataclass(frozen=True)
class RecoveryParams:
    alpha_abs: float
    psi: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.alpha_abs <= 1.0):
            raise DomainError(f"|α|={self.alpha_abs} 不在 [0, 1] 内")

    @property
    def beta_abs(self) -> float:
        return float(np.sqrt(max(1.0 - self.alpha_abs**2, 0.0)))


@dataclass(frozen=True)
class AD41Context:
    theta: float

    def __post_init__(self):
        _check_theta(self.theta)

    @property
    def tau(self) -> float:
        return 1.0 - self.theta


def _basis_ket(bits: str) -> np.ndarray:
    ket = np.zeros(2**N_QUBITS, dtype=complex)
    ket[int(bits, 2)] = 1.0
    return ket


def encode_isometry() -> np.ndarray:
    """16×2 编码等距 C，列为 |0_L⟩, |1_L⟩"""
    zero_l = (_basis_ket("0000") + _basis_ket("1111")) / np.sqrt(2)
    one_l = (_basis_ket("0011") + _basis_ket("1100")) / np.sqrt(2)
    return np.stack([zero_l, one_l], axis=1)


def stabilizer_generators() -> tuple[str, ...]:
    return ("XXXX", "ZZII", "IIZZ")


def stabilizer_projector() -> np.ndarray:
    """Π = Π_j (I + S_j)/2"""
    eye = np.eye(2**N_QUBITS, dtype=complex)
    return reduce(lambda acc, s: acc @ (eye + pauli_string(s)) / 2, stabilizer_generators(), eye)


def logical_paulis() -> dict[str, np.ndarray]:
    return {"X": pauli_string("XXII"), "Y": pauli_string("YXZI"), "Z": pauli_string("ZIZI")}


def logical_noise(theta: float) -> QuantumChannel:
    """N_θ = AD(θ)^⊗4 ∘ E，2 → 16"""
    _check_theta(theta)
    return compose(tensor_power(amplitude_damping(theta), N_QUBITS), isometry_channel(encode_isometry()))


def fe_family(params: RecoveryParams, theta: float) -> float:
    """¼ + (√2/4)|α|τcos ψ + 2τ² + (√(2(1−|α|²))cos φ − 8)τ³/4 + τ⁴/4"""
    tau = AD41Context(theta).tau
    return float(
        0.25
        + np.sqrt(2) / 4 * params.alpha_abs * tau * np.cos(params.psi)
        + 2 * tau**2
        + (np.sqrt(2) * params.beta_abs * np.cos(params.phi) - 8) * tau**3 / 4
        + tau**4 / 4
    )


def alpha_opt(theta: float) -> float:
    tau = AD41Context(theta).tau
    return float(1.0 / np.sqrt(1.0 + tau**4))


def fe_optimal(theta: float) -> float:
    """¼[1 + τ√(2(1+τ⁴)) + τ²(8 − 8τ + τ²)]"""
    tau = AD41Context(theta).tau
    return float(0.25 * (1 + tau * np.sqrt(2 * (1 + tau**4)) + tau**2 * (8 - 8 * tau + tau**2)))


def fe_best_guess(theta: float, theta_hat: float) -> float:
    """以 θ̂ 的最优参数恢复真实噪声 θ"""
    return fe_family(RecoveryParams(alpha_opt(_check_theta(theta_hat))), theta)


def h_func(theta: float) -> float:
    tau = AD41Context(theta).tau
    return float(tau**3 / (np.sqrt(2) * (1 + tau**4) ** 1.5))


def series_reference(name: str) -> tuple[float, ...]:
    try:
        return SERIES[name]
    except KeyError as e:
        raise DomainError(f"未知的展开名称: {name}（可选 {', '.join(SERIES)}）") from e


def evaluate_series(name: str, theta: float | np.ndarray) -> float | np.ndarray:
    return P.polyval(theta, series_reference(name))


@dataclass(frozen=True)
class SeriesFit:
    coefficients: tuple[float, ...]
    window: tuple[float, float]
    residual: float


def fit_series(
    thetas: np.ndarray,
    values: np.ndarray,
    degree: int = 3,
) -> SeriesFit:
    """最小二乘多项式拟合；取三次项以吸收 O(θ³) 余项对二次系数的影响"""
    thetas = np.asarray(thetas, dtype=float)
    values = np.asarray(values, dtype=float)
    if thetas.shape != values.shape or thetas.size <= degree:
        raise DomainError(f"拟合点数 {thetas.size} 不足以拟合 {degree} 次多项式")
    coeffs = P.polyfit(thetas, values, degree)
    residual = float(np.abs(P.polyval(thetas, coeffs) - values).max())
    return SeriesFit(tuple(float(c) for c in coeffs), (float(thetas.min()), float(thetas.max())), residual)


def fit_window(step: float = 0.001, window: float = SERIES_FIT_WINDOW) -> np.ndarray:
    """拟合窗口 [0, window] 上的等距网格"""
    return np.linspace(0.0, window, int(round(window / step)) + 1)
