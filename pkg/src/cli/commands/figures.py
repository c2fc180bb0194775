"""图表与展开表数据命令。"""
from __future__ import annotations

import sys

from src.core import RecoveryOptions
from src.core.constants import DEFAULT_GRID_STEP, FIG5_THETA_MAX
from src.multicycle import fig4_data
from src.reports import (
    FIG3_HEADER,
    FIG4_HEADER,
    FIG5_HEADER,
    fig5_data,
    rows_from_dataclasses,
    table_data,
    theta_grid,
)
from src.spectator import SpectatorConfig, fig3_data
from src.utils.logger import get_logger

from .base import RunConfig

logger = get_logger("cli.figures")


class FigureCommandsMixin:
    """fig3 / fig4 / fig5 / table 命令 Mixin"""

    def fig3(self, run: RunConfig) -> int:
        step = run.flags.get("grid") or DEFAULT_GRID_STEP
        gammas = run.flags["gammas"]
        logger.info(f"生成 fig3 数据: γ={gammas}, M={run.flags['m']}, 步长={step}")
        rows = fig3_data(gammas, theta_grid(step, 1.0 - step), m=run.flags["m"])
        self._emit_csv(run.out_path, FIG3_HEADER, rows_from_dataclasses(rows, FIG3_HEADER))
        return 0

    def fig4(self, run: RunConfig) -> int:
        step = run.flags.get("grid") or DEFAULT_GRID_STEP
        cfg = SpectatorConfig(gamma=run.flags["gamma"], m_qubits=run.flags["m"])
        rows = fig4_data(run.flags["fe_prev"], theta_grid(step, 1.0 - step), cfg)
        for fe_prev in run.flags["fe_prev"]:
            flagged = sum(1 for r in rows if r.fe_prev == fe_prev and r.advantage_flag)
            logger.info(f"fe_prev={fe_prev}: {flagged} 个网格点存在相干增强")
        self._emit_csv(run.out_path, FIG4_HEADER, rows_from_dataclasses(rows, FIG4_HEADER))
        return 0

    def fig5(self, run: RunConfig) -> int:
        step = run.flags.get("grid") or DEFAULT_GRID_STEP
        result = fig5_data(theta_grid(step, FIG5_THETA_MAX, include_zero=True))
        self._emit_csv(run.out_path, FIG5_HEADER, result.rows)
        summary = {"crossing_exact": result.crossing_exact, "crossing_series": result.crossing_series}
        if run.out_path is None:
            # stdout 已被 CSV 占用，交叉点写到 stderr
            self._emit_json(summary, sys.stderr)
        else:
            self._emit_json({"out": str(run.out_path), **summary})
        return 0

    def table(self, run: RunConfig) -> int:
        opts = RecoveryOptions(seed=run.seed, workers=self._workers(run))
        report = table_data(with_sdp=run.flags.get("with_sdp", False), opts=opts)
        payload = report.to_dict()
        if run.flags.get("with_sdp"):
            payload["seed"] = run.seed
        self._emit_json(payload)
        return 0
