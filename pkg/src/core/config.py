"""Configuration dataclasses for recoverybound."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from src.core.constants import DIM_CAP, ENV_PREFIX, OUTPUT_DIRNAME


@dataclass(frozen=True)
class DiamondOptions:
    """菱形距离多起点估计参数"""
    starts: int = 32
    max_iters: int = 500
    tol: float = 1e-8
    seed: int | None = None
    workers: int = 1


@dataclass(frozen=True)
class RecoveryOptions:
    """最优恢复搜索参数（env_dim 为 None 时取 d·D）"""
    env_dim: int | None = None
    starts: int = 8
    max_iters: int = 2000
    tol: float = 1e-13
    seed: int | None = None
    workers: int = 1


@dataclass
class AppConfig:
    seed: int = 20240101
    log_level: int = logging.INFO
    workers: int = 1
    dim_cap: int = DIM_CAP
    output_dir: Path = field(default_factory=lambda: Path.cwd() / OUTPUT_DIRNAME)
    diamond: DiamondOptions = field(default_factory=DiamondOptions)
    recovery: RecoveryOptions = field(default_factory=RecoveryOptions)

    @classmethod
    def from_env(cls) -> "AppConfig":
        """从环境变量加载配置"""
        from dotenv import load_dotenv
        from src.core.exceptions import ConfigError
        load_dotenv()

        seed = _int_from_env("SEED", 20240101)
        if seed < 0:
            raise ConfigError(f"无效的 {ENV_PREFIX}SEED: 必须为非负整数")

        workers = _int_from_env("WORKERS", 1)
        if workers < 1:
            raise ConfigError(f"无效的 {ENV_PREFIX}WORKERS: 至少为 1")

        dim_cap = _int_from_env("DIM_CAP", DIM_CAP)
        if not (2 <= dim_cap <= DIM_CAP):
            raise ConfigError(f"无效的 {ENV_PREFIX}DIM_CAP: 必须在 2-{DIM_CAP} 范围内")

        level_name = os.environ.get(f"{ENV_PREFIX}LOG_LEVEL", "INFO").strip().upper()
        log_level = logging.getLevelName(level_name)
        if not isinstance(log_level, int):
            raise ConfigError(f"无效的 {ENV_PREFIX}LOG_LEVEL: {level_name}")

        output_dir = Path(os.environ.get(f"{ENV_PREFIX}OUTPUT_DIR", str(Path.cwd() / OUTPUT_DIRNAME)))

        return cls(
            seed=seed,
            log_level=log_level,
            workers=workers,
            dim_cap=dim_cap,
            output_dir=output_dir,
            diamond=DiamondOptions(seed=seed, workers=workers),
            recovery=RecoveryOptions(seed=seed, workers=workers),
        )


def _int_from_env(name: str, default: int) -> int:
    """安全解析整数环境变量"""
    from src.core.exceptions import ConfigError

    raw = os.environ.get(f"{ENV_PREFIX}{name}", "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"无效的 {ENV_PREFIX}{name}: {e}") from e
