"""Command-line application builder and runner."""
from __future__ import annotations

import argparse
import logging
from typing import Sequence, TextIO

from src.core import (
    AppConfig,
    ChannelFormatError,
    ConfigError,
    DimensionError,
    NotCPTPError,
    RecoveryBoundError,
    describe_runtime,
)
from src.cli.commands import ReportAPI, RunConfig, build_parser
from src.utils import setup_logger

# 退出码
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_CHANNEL = 3


def create_app(config: AppConfig, stdout: TextIO | None = None) -> tuple[ReportAPI, argparse.ArgumentParser]:
    """创建命令行 API 和解析器"""
    api = ReportAPI(config, stdout)
    return api, build_parser(api)


def _resolve_level(name: str | None, default: int) -> int:
    if name is None:
        return default
    level = logging.getLevelName(name.strip().upper())
    if not isinstance(level, int):
        raise ConfigError(f"无效的日志级别: {name}")
    return level


def exit_code_for(error: BaseException) -> int:
    """异常到退出码的映射"""
    if isinstance(error, ChannelFormatError):
        return EXIT_INPUT
    if isinstance(error, (DimensionError, NotCPTPError)):
        return EXIT_CHANNEL
    return EXIT_FAILURE


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """加载配置、解析参数并执行命令，返回退出码"""
    logger = setup_logger()
    try:
        config = AppConfig.from_env()
    except ConfigError as e:
        logger.error(f"配置错误: {e}")
        return EXIT_FAILURE

    api, parser = create_app(config, stdout)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 的 --help 以 0 退出，参数错误以 2 退出
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    try:
        setup_logger(level=_resolve_level(args.log_level, config.log_level))
        run_config = RunConfig.from_args(args, config)
        logger.debug(f"运行环境: {describe_runtime()}")
        logger.info(f"执行命令 {run_config.command}，种子={run_config.seed}")
        return args.handler(run_config)
    except RecoveryBoundError as e:
        code = exit_code_for(e)
        logger.error(f"{type(e).__name__}: {e}")
        return code
    except Exception as e:
        logger.exception(f"未预期的错误: {e}")
        return EXIT_FAILURE
