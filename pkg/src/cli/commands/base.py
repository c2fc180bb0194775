"""命令行 API 基础类和工具方法。"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence, TextIO

from src.core import AppConfig, DomainError, file_digest
from src.reports.writer import render_csv, write_csv
from src.utils.logger import get_logger

logger = get_logger("cli")

COMMANDS = ("fig3", "fig4", "fig5", "table", "diamond", "fe", "optimize-recovery", "verify")
STOCHASTIC_COMMANDS = frozenset({"diamond", "optimize-recovery", "verify"})


@dataclass
class RunConfig:
    """一次命令调用的解析结果"""
    command: str
    seed: int
    flags: dict[str, Any] = field(default_factory=dict)
    out_path: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace, config: AppConfig) -> "RunConfig":
        flags = {
            k: v for k, v in vars(args).items()
            if k not in {"command", "handler", "seed", "out", "log_level"}
        }
        seed = config.seed if getattr(args, "seed", None) is None else args.seed
        run = cls(command=args.command, seed=seed, flags=flags, out_path=getattr(args, "out", None))
        run.validate()
        return run

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise DomainError(f"未知命令: {self.command}")
        if self.command in STOCHASTIC_COMMANDS and self.seed < 0:
            raise DomainError(f"{self.command} 需要非负种子")
        step = self.flags.get("grid")
        if step is not None and not (0.0 < step < 0.5):
            raise DomainError(f"网格步长 {step} 必须位于 (0, 0.5) 内")


def float_list(text: str) -> list[float]:
    """解析逗号分隔的浮点数列表"""
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"无效的数字列表: {text}") from e
    if not values:
        raise argparse.ArgumentTypeError("列表不能为空")
    return values


class ReportAPIBase:
    """命令行 API 基础类，包含配置和输出工具"""

    def __init__(self, config: AppConfig | None = None, stdout: TextIO | None = None):
        self.config = config or AppConfig()
        self.stdout = stdout or sys.stdout

    def _emit_json(self, payload: dict[str, Any], stream: TextIO | None = None) -> None:
        stream = stream or self.stdout
        stream.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
        stream.flush()

    def _emit_csv(self, out: Path | None, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        """指定 --out 时原子写文件，否则输出到 stdout"""
        if out is None:
            self.stdout.write(render_csv(header, rows))
            self.stdout.flush()
        else:
            write_csv(out, header, rows)

    @staticmethod
    def _input_info(path: Path) -> dict[str, str]:
        return {"path": str(path), "sha256": file_digest(path)}

    def _workers(self, run: RunConfig) -> int:
        return run.flags.get("workers") or self.config.workers
