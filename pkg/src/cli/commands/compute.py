"""基于信道文件的计算命令。"""
from __future__ import annotations

from src.bounds import diamond_lower_estimate, diamond_upper_choi, fe_lower_bound
from src.channels import load_channel, save_channel
from src.core import DiamondOptions, RecoveryOptions
from src.metrics import average_fidelity, chi00, entanglement_fidelity, error_angle
from src.recovery import optimize_recovery
from src.utils.logger import get_logger

from .base import RunConfig

logger = get_logger("cli.compute")


class ComputeCommandsMixin:
    """diamond / fe / optimize-recovery 命令 Mixin"""

    def diamond(self, run: RunConfig) -> int:
        path_a, path_b = run.flags["a"], run.flags["b"]
        q, s = load_channel(path_a), load_channel(path_b)
        opts = DiamondOptions(
            starts=run.flags["starts"],
            max_iters=run.flags["max_iters"],
            seed=run.seed,
            workers=self._workers(run),
        )
        logger.info(f"计算菱形距离: {path_a.name} vs {path_b.name}，{opts.starts} 个起点")
        estimate = diamond_lower_estimate(q, s, opts)
        square = q.is_square and s.is_square
        self._emit_json(
            {
                "value": estimate.value,
                "upper_bound": diamond_upper_choi(q, s),
                "fe_lower_bound": fe_lower_bound(q, s) if square else None,
                "converged": estimate.converged,
                "starts": estimate.starts_used,
                "seed": run.seed,
                "inputs": {"a": self._input_info(path_a), "b": self._input_info(path_b)},
            }
        )
        return 0

    def fe(self, run: RunConfig) -> int:
        path = run.flags["channel"]
        ch = load_channel(path)
        self._emit_json(
            {
                "fe": entanglement_fidelity(ch),
                "average_fidelity": average_fidelity(ch),
                "error_angle": error_angle(ch),
                "chi00": chi00(ch),
                "input": self._input_info(path),
            }
        )
        return 0

    def optimize_recovery(self, run: RunConfig) -> int:
        path = run.flags["channel"]
        noise = load_channel(path)
        opts = RecoveryOptions(
            env_dim=run.flags.get("env_dim"),
            starts=run.flags["starts"],
            max_iters=run.flags["max_iters"],
            seed=run.seed,
            workers=self._workers(run),
        )
        solution = optimize_recovery(noise, opts)
        out = run.out_path or self.config.output_dir / "recovery.json"
        save_channel(solution.recovery, out)
        self._emit_json(
            {
                "fe_achieved": solution.fe_achieved,
                "iterations": solution.iterations,
                "converged": solution.converged,
                "seed": solution.seed,
                "recovery": str(out),
                "input": self._input_info(path),
            }
        )
        return 0
