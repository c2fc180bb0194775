"""verify 命令。"""
from __future__ import annotations

import json

from src.channels import write_atomic
from src.utils.logger import get_logger
from src.verify import registered_checks, run_suite

from .base import RunConfig

logger = get_logger("cli.verify")


class VerifyCommandsMixin:
    """verify 命令 Mixin"""

    def verify(self, run: RunConfig) -> int:
        pattern = run.flags.get("filter")
        if run.flags.get("list"):
            self._emit_json(
                {"checks": [{"name": c.name, "description": c.description} for c in registered_checks(pattern)]}
            )
            return 0

        logger.info(f"开始验证: 种子={run.seed}, 过滤={pattern or '全部'}, 快速模式={run.flags.get('quick', False)}")
        report = run_suite(run.seed, pattern, quick=run.flags.get("quick", False))
        payload = report.to_dict()
        self._emit_json(payload)
        if run.out_path is not None:
            write_atomic(run.out_path, json.dumps(payload, ensure_ascii=False, indent=2) + "\n")

        if not report.records:
            logger.warning(f"没有匹配 {pattern!r} 的检查")
            return 1
        if report.passed:
            logger.info(f"全部 {len(report.records)} 项检查通过（{report.elapsed:.1f}s）")
            return 0
        names = ", ".join(r.name for r in report.failures)
        logger.error(f"{len(report.failures)} 项检查失败: {names}")
        return 1
