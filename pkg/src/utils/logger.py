"""Logging module for recoverybound

日志统一写到 stderr，stdout 只留给 CSV / JSON 输出。
"""
import logging
import sys

ROOT_LOGGER = "recoverybound"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

_initialized = False


class _StderrHandler(logging.StreamHandler):
    """每次写入时取当前的 sys.stderr（测试里 stderr 会被替换）"""

    def __init__(self) -> None:
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _value) -> None:
        pass


def setup_logger(name: str = ROOT_LOGGER, level: int = logging.INFO) -> logging.Logger:
    """初始化 recoverybound 根 logger，重复调用只更新级别"""
    global _initialized
    logger = logging.getLogger(name)
    if not _initialized:
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
        logger.addHandler(handler)
        _initialized = True
    logger.setLevel(level)
    return logger


def get_logger(name: str) -> logging.Logger:
    """Get a child logger for a specific module."""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
