"""Optimal recovery search over Stinespring isometries.

A recovery R: D → d is stored as an isometry V of shape (d·E, D), viewed as
(d, E, D) so that R_e = V[:, e, :]. For noise N: d → D the objective is

    F_e(R∘N) = (1/d²) Σ_{e,k} |Tr(R_e N_k)|² = (1/d²) Tr(X† W̄ X)

with X[(a, j), e] = R_e[a, j] and W̄ = conj(Σ_k n_k n_k†), n_k = vec(N_kᵀ).
The objective is a convex quadratic in V, so each update V ← polar(∇f)
maximizes its linearization over the isometries and never decreases F_e.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import polar

from src.channels.channel import QuantumChannel, compose, prune
from src.core.config import RecoveryOptions
from src.core.constants import DIM_CAP, PRUNE_TOL
from src.core.exceptions import DimensionError, DomainError
from src.metrics.fidelity import entanglement_fidelity
from src.utils.logger import get_logger
from src.utils.rng import complex_gaussian, spawn_generators

logger = get_logger("recovery")


@dataclass(frozen=True, eq=False)
class RecoverySolution:
    recovery: QuantumChannel
    fe_achieved: float
    iterations: int
    converged: bool
    seed: int


class RecoveryProblem:
    """保真度目标及其在等距流形上的梯度"""

    def __init__(self, noise: QuantumChannel, env_dim: int | None = None):
        self.d, self.big_d = noise.d_in, noise.d_out
        if self.d * self.big_d > DIM_CAP:
            raise DimensionError(f"d·D = {self.d * self.big_d} 超过上限 {DIM_CAP}")
        self.env = env_dim or self.d * self.big_d
        if not (1 <= self.env <= self.d * self.big_d):
            raise DomainError(f"env_dim={self.env} 不在 [1, {self.d * self.big_d}] 内")
        if self.d * self.env < self.big_d:
            raise DimensionError(f"env_dim={self.env} 过小，无法构成 {self.big_d}→{self.d * self.env} 等距")
        vecs = np.stack([k.T.reshape(-1) for k in noise.kraus], axis=1)
        self.w = (vecs @ vecs.conj().T).conj()

    def _x(self, v: np.ndarray) -> np.ndarray:
        return v.reshape(self.d, self.env, self.big_d).transpose(0, 2, 1).reshape(-1, self.env)

    def objective(self, v: np.ndarray) -> float:
        x = self._x(v)
        return float(np.einsum("ie,ij,je->", x.conj(), self.w, x).real / self.d**2)

    def gradient(self, v: np.ndarray) -> np.ndarray:
        """欧氏梯度，满足 df = Re Tr(G† dV)"""
        return self._v(2.0 * self.w @ self._x(v) / self.d**2)

    def riemannian_gradient(self, v: np.ndarray) -> np.ndarray:
        g = self.gradient(v)
        a = v.conj().T @ g
        return g - v @ ((a + a.conj().T) / 2)

    def _v(self, x: np.ndarray) -> np.ndarray:
        return x.reshape(self.d, self.big_d, self.env).transpose(0, 2, 1).reshape(-1, self.big_d)

    def random_isometry(self, rng: np.random.Generator) -> np.ndarray:
        u, _ = polar(complex_gaussian(rng, (self.d * self.env, self.big_d)))
        return u

    def transpose_isometry(self) -> np.ndarray:
        """转置信道起点：R_k ∝ N_k†（取 W̄ 的前 env 个本征方向），再做极分解归一"""
        evals, evecs = np.linalg.eigh(self.w)
        x = evecs[:, -self.env:] * np.sqrt(np.clip(evals[-self.env:], 0.0, None))
        u, _ = polar(self._v(x))
        return u

    def to_channel(self, v: np.ndarray) -> QuantumChannel:
        blocks = v.reshape(self.d, self.env, self.big_d)
        ops = tuple(blocks[:, e, :] for e in range(self.env))
        return prune(QuantumChannel(self.big_d, self.d, ops), PRUNE_TOL)


@dataclass(frozen=True, eq=False)
class _Ascent:
    index: int
    v: np.ndarray
    value: float
    iterations: int
    converged: bool


def _ascend(problem: RecoveryProblem, v: np.ndarray, opts: RecoveryOptions, index: int) -> _Ascent:
    # V ← polar(∇f)，目标单调不减
    value = problem.objective(v)
    for it in range(1, opts.max_iters + 1):
        candidate, _ = polar(problem.gradient(v))
        new_value = problem.objective(candidate)
        if new_value - value <= opts.tol:
            if new_value > value:
                v, value = candidate, new_value
            return _Ascent(index, v, value, it, True)
        v, value = candidate, new_value
    return _Ascent(index, v, value, opts.max_iters, False)


def optimize_recovery(noise: QuantumChannel, opts: RecoveryOptions | None = None) -> RecoverySolution:
    """多起点 see-saw 迭代（起点 0 为转置信道），返回使 F_e(R∘N) 最大的恢复信道"""
    opts = opts or RecoveryOptions()
    if opts.starts < 1 or opts.max_iters < 1:
        raise DomainError("starts 与 max_iters 至少为 1")
    problem = RecoveryProblem(noise, opts.env_dim)
    seed = 0 if opts.seed is None else opts.seed
    rngs = spawn_generators(seed, opts.starts)
    initial = [problem.transpose_isometry()] + [problem.random_isometry(rng) for rng in rngs[1:]]

    def run(index: int) -> _Ascent:
        return _ascend(problem, initial[index], opts, index)

    logger.info(
        f"开始恢复优化: 噪声 {noise.d_in}->{noise.d_out}, 环境维度 {problem.env}, {opts.starts} 个起点"
    )
    if opts.workers > 1:
        with ThreadPoolExecutor(max_workers=opts.workers) as pool:
            results = list(pool.map(run, range(opts.starts)))
    else:
        results = [run(i) for i in range(opts.starts)]

    top = max(r.value for r in results)
    best = next(r for r in results if r.value >= top - 1e-12)
    if not best.converged:
        logger.warning(f"恢复优化在 {opts.max_iters} 次迭代内未收敛（起点 {best.index}）")

    recovery = problem.to_channel(best.v)
    fe = entanglement_fidelity(compose(recovery, noise))
    residual = float(np.linalg.norm(problem.riemannian_gradient(best.v)))
    logger.info(
        f"恢复优化完成: F_e = {fe:.10f}（起点 {best.index}，{best.iterations} 次迭代，切向梯度范数 {residual:.2e}）"
    )
    return RecoverySolution(
        recovery=recovery,
        fe_achieved=fe,
        iterations=best.iterations,
        converged=best.converged,
        seed=seed,
    )


def recovery_for_estimate(
    noise_family: Callable[[float], QuantumChannel],
    theta_hat: float,
    opts: RecoveryOptions | None = None,
) -> RecoverySolution:
    """按估计值 θ̂ 构造的最优恢复；调用方再与真实噪声 N_θ 复合"""
    return optimize_recovery(noise_family(theta_hat), opts)
