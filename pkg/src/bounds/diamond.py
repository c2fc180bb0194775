"""Diamond-distance estimation and the fidelity-based bounds built on it.

The estimator maximizes ½‖(id⊗Q)(ψ) − (id⊗S)(ψ)‖₁ over pure ψ on
reference⊗input. For a fixed sign projector Π of the output difference the
objective ⟨ψ|H|ψ⟩ with H = Σ M†ΠM − Σ N†ΠN is a lower bound on the trace
distance at every ψ and equals it at the current iterate, so moving to the
top eigenvector of H never decreases the value.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.channels.channel import QuantumChannel, require_square
from src.channels.choi import kraus_to_choi, max_entangled_vector
from src.core.config import DiamondOptions
from src.core.constants import DIM_CAP
from src.core.exceptions import DimensionError, DomainError
from src.metrics.fidelity import entanglement_fidelity
from src.utils.logger import get_logger
from src.utils.rng import complex_gaussian, spawn_generators

logger = get_logger("diamond")

_TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DiamondEstimate:
    value: float
    achieving_state: np.ndarray
    starts_used: int
    converged: bool


@dataclass(frozen=True)
class _StartResult:
    index: int
    value: float
    state: np.ndarray
    iterations: int
    converged: bool


def _same_shape(q: QuantumChannel, s: QuantumChannel) -> None:
    if (q.d_in, q.d_out) != (s.d_in, s.d_out):
        raise DimensionError(f"信道维度不一致: {q.d_in}->{q.d_out} vs {s.d_in}->{s.d_out}")


def _stack(ch: QuantumChannel) -> np.ndarray:
    return np.stack(ch.kraus)


def _output(kraus: np.ndarray, psi: np.ndarray, d_in: int) -> np.ndarray:
    """(id⊗Q)(|ψ⟩⟨ψ|)，ψ 以 (参考, 输入) 顺序排列"""
    mat = psi.reshape(d_in, d_in)
    vecs = np.einsum("ri,nai->nra", mat, kraus).reshape(len(kraus), -1)
    return vecs.T @ vecs.conj()


def _difference(kq: np.ndarray, ks: np.ndarray, psi: np.ndarray, d_in: int) -> np.ndarray:
    delta = _output(kq, psi, d_in) - _output(ks, psi, d_in)
    return (delta + delta.conj().T) / 2


def output_trace_distance(q: QuantumChannel, s: QuantumChannel, psi: np.ndarray) -> float:
    """给定纯态 ψ 上两信道输出的迹距离"""
    _same_shape(q, s)
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (q.d_in * q.d_in,):
        raise DimensionError(f"态矢量长度 {psi.shape} 与 {q.d_in}² 不符")
    delta = _difference(_stack(q), _stack(s), psi, q.d_in)
    return float(0.5 * np.abs(np.linalg.eigvalsh(delta)).sum())


def _ascent(
    kq: np.ndarray,
    ks: np.ndarray,
    d_in: int,
    d_out: int,
    psi: np.ndarray,
    opts: DiamondOptions,
    index: int,
) -> _StartResult:
    psi = psi / np.linalg.norm(psi)
    value = -np.inf
    for it in range(1, opts.max_iters + 1):
        evals, evecs = np.linalg.eigh(_difference(kq, ks, psi, d_in))
        positive = evecs[:, evals > 0]
        current = float(evals[evals > 0].sum())
        if current - value <= opts.tol * max(1.0, abs(current)):
            return _StartResult(index, current, psi, it, True)
        value = current
        if positive.shape[1] == 0:
            return _StartResult(index, 0.0, psi, it, True)
        proj = (positive @ positive.conj().T).reshape(d_in, d_out, d_in, d_out)
        h = (
            np.einsum("nai,rasb,nbj->risj", kq.conj(), proj, kq)
            - np.einsum("nai,rasb,nbj->risj", ks.conj(), proj, ks)
        ).reshape(d_in * d_in, d_in * d_in)
        hvals, hvecs = np.linalg.eigh((h + h.conj().T) / 2)
        # 当前态已是最大本征向量时保持不动（简并本征空间内不跳转）
        if (psi.conj() @ h @ psi).real < hvals[-1] - 1e-14:
            psi = hvecs[:, -1]
    evals = np.linalg.eigvalsh(_difference(kq, ks, psi, d_in))
    return _StartResult(index, float(evals[evals > 0].sum()), psi, opts.max_iters, False)


def diamond_lower_estimate(
    q: QuantumChannel,
    s: QuantumChannel,
    opts: DiamondOptions | None = None,
) -> DiamondEstimate:
    """多起点局部上升求菱形距离的下界估计

    第 0 个起点固定为最大纠缠态，其余起点由 seed 派生的独立随机流生成。
    seed 为 None 时使用 0。
    """
    opts = opts or DiamondOptions()
    _same_shape(q, s)
    if q.d_in * q.d_out > DIM_CAP:
        raise DimensionError(f"d_in·d_out = {q.d_in * q.d_out} 超过上限 {DIM_CAP}")
    if opts.starts < 1 or opts.max_iters < 1:
        raise DomainError("starts 与 max_iters 至少为 1")

    d_in, d_out = q.d_in, q.d_out
    kq, ks = _stack(q), _stack(s)
    seed = 0 if opts.seed is None else opts.seed
    rngs = spawn_generators(seed, opts.starts)
    starts = [max_entangled_vector(d_in)] + [
        complex_gaussian(rng, (d_in * d_in,)) for rng in rngs[1:]
    ]

    def run(index: int) -> _StartResult:
        return _ascent(kq, ks, d_in, d_out, starts[index], opts, index)

    if opts.workers > 1:
        with ThreadPoolExecutor(max_workers=opts.workers) as pool:
            results = list(pool.map(run, range(opts.starts)))
    else:
        results = [run(i) for i in range(opts.starts)]

    top = max(r.value for r in results)
    best = next(r for r in results if r.value >= top - _TIE_TOL)
    for r in results:
        logger.debug(f"起点 {r.index}: 值={r.value:.10f}, 迭代={r.iterations}, 收敛={r.converged}")
    if not best.converged:
        logger.warning(f"菱形距离估计在 {opts.max_iters} 次迭代内未收敛（起点 {best.index}）")

    value = min(max(output_trace_distance(q, s, best.state), 0.0), 1.0)
    return DiamondEstimate(
        value=value,
        achieving_state=best.state,
        starts_used=opts.starts,
        converged=best.converged,
    )


def diamond_upper_choi(q: QuantumChannel, s: QuantumChannel) -> float:
    """½‖Γ^Q − Γ^S‖₁（未归一化 Choi 矩阵）"""
    _same_shape(q, s)
    diff = kraus_to_choi(q).mat - kraus_to_choi(s).mat
    return float(0.5 * np.abs(np.linalg.eigvalsh((diff + diff.conj().T) / 2)).sum())


def kappa(d: int) -> float:
    """(d²−1)/d²"""
    if d < 2:
        raise DimensionError(f"维度必须 ≥ 2，得到 {d}")
    return (d * d - 1) / (d * d)


def diamond_depolarizing_exact(p1: float, p2: float, d: int) -> float:
    for p in (p1, p2):
        if not (0.0 <= p <= 1.0):
            raise DomainError(f"去极化参数 p={p} 不在 [0, 1] 内")
    return kappa(d) * abs(p1 - p2)


def fe_lower_bound(q: QuantumChannel, s: QuantumChannel) -> float:
    """|F_e(Q) − F_e(S)|，不超过真实菱形距离"""
    require_square(q, s)
    return abs(entanglement_fidelity(q) - entanglement_fidelity(s))


@dataclass(frozen=True, eq=False)
class GapBound:
    lower_estimate: float
    upper: float
    estimate: DiamondEstimate

    def admits(self, delta_fe: float, tol: float) -> tuple[bool, bool]:
        """(ΔF_e ≤ Choi 上界, ΔF_e ≤ 估计值 + tol)"""
        return delta_fe <= self.upper + tol, delta_fe <= self.lower_estimate + tol


def spectator_gap_bound(
    r_opt: QuantumChannel,
    r_guess: QuantumChannel,
    opts: DiamondOptions | None = None,
) -> GapBound:
    """最优恢复与估计恢复之间的菱形距离（估计值与 Choi 上界）"""
    estimate = diamond_lower_estimate(r_opt, r_guess, opts)
    return GapBound(
        lower_estimate=estimate.value,
        upper=diamond_upper_choi(r_opt, r_guess),
        estimate=estimate,
    )
